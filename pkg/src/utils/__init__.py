"""Utility modules"""
from .config import Config, parse_int_list

__all__ = ['Config', 'parse_int_list']
