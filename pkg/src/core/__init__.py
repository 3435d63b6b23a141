"""Core modules: data model, errors and the simplification algorithms"""
from .errors import (
    ConfigError, DimensionMismatch, EmptyTrajectory, NonFiniteValue, NonMonotonicTime,
    OutOfRangeCoordinate, ParameterRangeWarning, ParseError, SingularSystem,
    TrajectoryError, WindowTooSmall,
)
from .trajectory import (
    CoefficientKind, CoefficientSeries, SimplifyParams, SimplifyResult, Trajectory, validate_trajectory,
)
from .faststray import (
    DEFAULT_CLAMPS, CoefficientClamps, FastSTray, NeighborhoodWindow, compute_coefficients,
    correlation_coefficient, direction_coefficient, moving_average_filter, select_points, simplify,
    suppression_mask, window_maxima,
)
from .rdp import rdp_simplify

__all__ = [
    'TrajectoryError', 'EmptyTrajectory', 'NonMonotonicTime', 'DimensionMismatch', 'NonFiniteValue',
    'WindowTooSmall', 'SingularSystem', 'ParseError', 'OutOfRangeCoordinate', 'ConfigError',
    'ParameterRangeWarning',
    'Trajectory', 'CoefficientKind', 'SimplifyParams', 'CoefficientSeries', 'SimplifyResult',
    'validate_trajectory',
    'CoefficientClamps', 'DEFAULT_CLAMPS', 'NeighborhoodWindow', 'moving_average_filter',
    'correlation_coefficient', 'direction_coefficient', 'compute_coefficients', 'select_points',
    'suppression_mask', 'window_maxima', 'simplify', 'FastSTray', 'rdp_simplify',
]
