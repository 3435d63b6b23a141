"""Spline reconstruction of simplified trajectories"""
from .tridiagonal import PIVOT_TOLERANCE, TridiagonalSystem, solve_tridiagonal
from .spline import CubicSpline, build_spline_system, evaluate, evaluate_batch, fit_spline, sample_uniform

__all__ = [
    'PIVOT_TOLERANCE', 'TridiagonalSystem', 'solve_tridiagonal',
    'CubicSpline', 'build_spline_system', 'fit_spline', 'evaluate', 'evaluate_batch', 'sample_uniform',
]
