"""Evaluation, sweeps, benchmarks and charts"""
from .metrics import (
    BaselineReport, EvaluationReport, evaluate_baseline, evaluate_simplification,
    reduction_percent, relative_error_percent, synchronous_error, trajectory_diameter,
)
from .sweep import format_sweep_table, sweep_gamma
from .benchmark import BenchmarkResult, growth_exponent, run_benchmark
from .synthetic import gps_like_track, smooth_hand_trajectory, square_trajectory
from .chart_generator import TrajectoryChart

__all__ = [
    'EvaluationReport', 'BaselineReport', 'synchronous_error', 'reduction_percent',
    'relative_error_percent', 'trajectory_diameter', 'evaluate_simplification', 'evaluate_baseline',
    'sweep_gamma', 'format_sweep_table',
    'BenchmarkResult', 'growth_exponent', 'run_benchmark',
    'smooth_hand_trajectory', 'square_trajectory', 'gps_like_track',
    'TrajectoryChart',
]
