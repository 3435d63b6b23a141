"""FastSTray - open-loop trajectory simplification"""
