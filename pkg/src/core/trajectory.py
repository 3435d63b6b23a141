"""
Trajectory data model: trajectories, simplification parameters and results
"""
import logging
import math
import warnings
from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

import numpy as np

from .errors import (
    ConfigError,
    DimensionMismatch,
    EmptyTrajectory,
    NonFiniteValue,
    NonMonotonicTime,
    ParameterRangeWarning,
    TrajectoryError,
)

logger = logging.getLogger(__name__)

SUPPORTED_DIMENSIONS = (2, 3)
USUAL_PARAMETER_LIMIT = 10


def _frozen_array(values, dtype=np.float64) -> np.ndarray:
    array = np.array(values, dtype=dtype, copy=True)
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class Trajectory:
    """
    Ordered (position, timestamp) samples.

    Attributes:
        points: (N, D) positions, D in {2, 3}
        timestamps: (N,) strictly increasing seconds
        time_offset: absolute time subtracted from the raw timestamps
    """
    points: np.ndarray
    timestamps: np.ndarray
    time_offset: float = 0.0

    def __post_init__(self):
        points = _frozen_array(self.points)
        timestamps = _frozen_array(self.timestamps)
        if points.ndim != 2 or timestamps.ndim != 1:
            raise DimensionMismatch(
                f"expected (N, D) points and (N,) timestamps, got {points.shape} and {timestamps.shape}"
            )
        if len(points) < 2:
            raise EmptyTrajectory(f"a trajectory needs at least 2 points, got {len(points)}")
        if len(points) != len(timestamps):
            raise DimensionMismatch(
                f"{len(points)} points but {len(timestamps)} timestamps"
            )
        if points.shape[1] not in SUPPORTED_DIMENSIONS:
            raise DimensionMismatch(f"dimension must be 2 or 3, got {points.shape[1]}")
        if not np.all(np.isfinite(points)):
            raise NonFiniteValue("positions contain NaN or Inf")
        if not np.all(np.isfinite(timestamps)) or not math.isfinite(self.time_offset):
            raise NonFiniteValue("timestamps contain NaN or Inf")
        steps = np.diff(timestamps)
        bad = np.flatnonzero(steps <= 0)
        if bad.size:
            i = int(bad[0]) + 1
            raise NonMonotonicTime(i, float(timestamps[i - 1]), float(timestamps[i]))
        object.__setattr__(self, 'points', points)
        object.__setattr__(self, 'timestamps', timestamps)
        object.__setattr__(self, 'time_offset', float(self.time_offset))

    def __len__(self) -> int:
        return len(self.points)

    @property
    def dimension(self) -> int:
        return self.points.shape[1]

    @property
    def duration(self) -> float:
        return float(self.timestamps[-1] - self.timestamps[0])

    def subset(self, indices: Sequence[int]) -> 'Trajectory':
        """Trajectory made of the samples at the given (increasing) indices"""
        idx = np.asarray(indices, dtype=np.intp)
        return Trajectory(self.points[idx], self.timestamps[idx], self.time_offset)

    def with_points(self, points: np.ndarray) -> 'Trajectory':
        """Same timestamps, new positions"""
        return Trajectory(points, self.timestamps, self.time_offset)


class CoefficientKind(Enum):
    """Information coefficient used to score points"""
    CORRELATION = "correlation"
    DIRECTION = "direction"


@dataclass(frozen=True)
class SimplifyParams:
    """
    Neighborhood sizes of the simplification pipeline.

    Attributes:
        alpha: half-window of the moving-average filter (0 disables it)
        beta: half-window of the correlation neighborhood
        gamma: half-window of the non-maxima suppression
        coefficient: which information coefficient to compute
    """
    alpha: int = 1
    beta: int = 2
    gamma: int = 2
    coefficient: CoefficientKind = CoefficientKind.CORRELATION

    def __post_init__(self):
        for name, value, minimum in (('alpha', self.alpha, 0), ('beta', self.beta, 1), ('gamma', self.gamma, 1)):
            if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
                raise ConfigError(f"{name} must be an integer, got {value!r}")
            if value < minimum:
                raise ConfigError(f"{name} must be >= {minimum}, got {value}")
            if value > USUAL_PARAMETER_LIMIT:
                warnings.warn(
                    f"{name}={value} is above {USUAL_PARAMETER_LIMIT}; such values usually give "
                    f"very high reduction and high error",
                    ParameterRangeWarning,
                    stacklevel=3,
                )
        if not isinstance(self.coefficient, CoefficientKind):
            object.__setattr__(self, 'coefficient', CoefficientKind(self.coefficient))


@dataclass(frozen=True, eq=False)
class CoefficientSeries:
    """Per-point information scores, aligned with a filtered trajectory"""
    values: np.ndarray

    def __post_init__(self):
        values = _frozen_array(self.values)
        if values.ndim != 1:
            raise DimensionMismatch(f"coefficients must be one-dimensional, got shape {values.shape}")
        if not np.all(np.isfinite(values)):
            raise NonFiniteValue("coefficients contain NaN or Inf")
        if np.any(values < 0):
            raise TrajectoryError("coefficients must be non-negative")
        object.__setattr__(self, 'values', values)

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True, eq=False)
class SimplifyResult:
    """
    Output of a simplification run.

    Attributes:
        simplified: the kept samples
        kept_indices: indices of the kept samples in the (filtered) input
        coefficients: per-point scores of the input, for diagnostics
        source_count: number of samples in the input
    """
    simplified: Trajectory
    kept_indices: np.ndarray
    coefficients: CoefficientSeries
    source_count: int = field(default=0)

    def __post_init__(self):
        kept = _frozen_array(self.kept_indices, dtype=np.intp)
        source_count = self.source_count or len(self.coefficients)
        if kept.ndim != 1 or len(kept) != len(self.simplified):
            raise DimensionMismatch("kept_indices must match the simplified trajectory")
        if kept[0] != 0 or kept[-1] != source_count - 1:
            raise TrajectoryError(
                f"kept indices must start at 0 and end at {source_count - 1}"
            )
        if np.any(np.diff(kept) <= 0):
            raise TrajectoryError("kept indices must be strictly increasing")
        object.__setattr__(self, 'kept_indices', kept)
        object.__setattr__(self, 'source_count', int(source_count))

    @property
    def kept_count(self) -> int:
        return len(self.kept_indices)


def validate_trajectory(raw_points: Sequence[Sequence[float]],
                        raw_timestamps: Sequence[float],
                        time_offset: float = 0.0) -> Trajectory:
    """
    Build a Trajectory from raw lists, rebasing time to start at 0

    Args:
        raw_points: position vectors, all of dimension 2 or 3
        raw_timestamps: one timestamp per point, strictly increasing
        time_offset: absolute time already subtracted from raw_timestamps

    Returns:
        Validated Trajectory whose first timestamp is 0
    """
    points = list(raw_points)
    timestamps = list(raw_timestamps)
    if len(points) < 2:
        raise EmptyTrajectory(f"a trajectory needs at least 2 points, got {len(points)}")
    if len(points) != len(timestamps):
        raise DimensionMismatch(f"{len(points)} points but {len(timestamps)} timestamps")

    try:
        dims = {len(p) for p in points}
    except TypeError as e:
        raise DimensionMismatch(f"every point must be a coordinate vector: {e}") from e
    if len(dims) != 1:
        raise DimensionMismatch(f"points have mixed dimensions {sorted(dims)}")

    try:
        times = np.asarray(timestamps, dtype=np.float64)
        positions = np.asarray(points, dtype=np.float64)
    except (TypeError, ValueError) as e:
        raise NonFiniteValue(f"non-numeric value in trajectory: {e}") from e
    if not np.all(np.isfinite(times)):
        raise NonFiniteValue("timestamps contain NaN or Inf")

    start = float(times[0])
    return Trajectory(positions, times - start, time_offset + start)
