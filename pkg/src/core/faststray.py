"""
FastSTray open-loop simplification: moving-average smoothing, per-point
information coefficients and non-maxima suppression with forced endpoints.

Every stage is a fixed-width neighborhood pass, so a run costs
O((alpha + beta + gamma) * N).
"""
import logging
from dataclasses import dataclass
from typing import Tuple

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from .errors import DimensionMismatch, WindowTooSmall
from .trajectory import (
    CoefficientKind,
    CoefficientSeries,
    SimplifyParams,
    SimplifyResult,
    Trajectory,
)

logger = logging.getLogger(__name__)

MIN_CORRELATION_WINDOW = 3


@dataclass(frozen=True)
class CoefficientClamps:
    """
    Numerical guards for the degenerate cases of both coefficients.

    Attributes:
        variance_tolerance: a coordinate whose window variance is below this is
            treated as perfectly correlated (r^2 = 1)
        correlation_clamp: lower bound on r^2
        direction_clamp: lower bound on 1 + cosine similarity
    """
    variance_tolerance: float = 1e-12
    correlation_clamp: float = 1e-8
    direction_clamp: float = 1e-8


DEFAULT_CLAMPS = CoefficientClamps()


@dataclass(frozen=True)
class NeighborhoodWindow:
    """Inclusive index window clamped to [0, n - 1]"""
    center: int
    lo: int
    hi: int

    @classmethod
    def around(cls, center: int, half_width: int, n: int) -> 'NeighborhoodWindow':
        if not 0 <= center < n:
            raise IndexError(f"index {center} outside trajectory of {n} points")
        return cls(center, max(0, center - half_width), min(center + half_width, n - 1))

    @property
    def size(self) -> int:
        return self.hi - self.lo + 1

    def indices(self) -> range:
        return range(self.lo, self.hi + 1)


def _window_indices(centers: np.ndarray, half_width: int, n: int) -> Tuple[np.ndarray, np.ndarray]:
    """Index matrix and validity mask of the clamped windows around each center"""
    offsets = np.arange(-half_width, half_width + 1)
    idx = centers[:, None] + offsets[None, :]
    mask = (idx >= 0) & (idx < n)
    return np.clip(idx, 0, n - 1), mask


def moving_average_filter(trajectory: Trajectory, alpha: int) -> Trajectory:
    """
    Smooth positions with an unweighted moving average over clamped windows

    Args:
        trajectory: input samples
        alpha: half-window; 0 returns the input unchanged

    Returns:
        Trajectory with the same timestamps and averaged positions
    """
    if alpha < 0:
        raise ValueError(f"alpha must be >= 0, got {alpha}")
    if alpha == 0:
        return trajectory

    points = trajectory.points
    n = len(points)
    idx, mask = _window_indices(np.arange(n), alpha, n)
    weights = mask.astype(np.float64)[:, :, None]
    # Averaging deviations from the center keeps constant runs exact.
    deviations = (points[idx] - points[:, None, :]) * weights
    smoothed = points + deviations.sum(axis=1) / weights.sum(axis=1)
    return trajectory.with_points(smoothed)


def _correlation_scores(filtered: Trajectory, beta: int, centers: np.ndarray,
                        clamps: CoefficientClamps) -> np.ndarray:
    n = len(filtered)
    idx, mask = _window_indices(centers, beta, n)
    counts = mask.sum(axis=1)
    short = np.flatnonzero(counts < MIN_CORRELATION_WINDOW)
    if short.size:
        first = int(short[0])
        raise WindowTooSmall(int(centers[first]), int(counts[first]))

    weights = mask.astype(np.float64)
    counts = counts.astype(np.float64)

    times = filtered.timestamps[idx]
    t_mean = (times * weights).sum(axis=1) / counts
    dt = (times - t_mean[:, None]) * weights
    s_tt = (dt * dt).sum(axis=1)

    coords = filtered.points[idx]
    w3 = weights[:, :, None]
    c_mean = (coords * w3).sum(axis=1) / counts[:, None]
    dc = (coords - c_mean[:, None, :]) * w3
    s_cc = (dc * dc).sum(axis=1)
    s_ct = (dc * dt[:, :, None]).sum(axis=1)

    constant = s_cc / counts[:, None] < clamps.variance_tolerance
    with np.errstate(divide='ignore', invalid='ignore'):
        r_squared = (s_ct * s_ct) / (s_cc * s_tt[:, None])
    r_squared = np.where(constant, 1.0, r_squared)
    r_squared = np.clip(r_squared, clamps.correlation_clamp, 1.0)
    return (1.0 / r_squared).sum(axis=1)


def correlation_coefficient(filtered: Trajectory, beta: int, index: int,
                            clamps: CoefficientClamps = DEFAULT_CLAMPS) -> float:
    """
    Linear-correlation information coefficient of one point

    Sums 1 / r_d^2 over all coordinates d, where r_d is the Pearson correlation
    between coordinate d and time over the clamped window of half-width beta.

    Args:
        filtered: smoothed trajectory
        beta: half-window of the neighborhood
        index: point to score

    Returns:
        Score >= D (one term per coordinate, each >= 1)
    """
    if beta < 1:
        raise ValueError(f"beta must be >= 1, got {beta}")
    NeighborhoodWindow.around(index, beta, len(filtered))
    return float(_correlation_scores(filtered, beta, np.array([index]), clamps)[0])


def _direction_scores(points: np.ndarray, clamps: CoefficientClamps) -> np.ndarray:
    """Scores of the interior points of `points` (length len(points) - 2)"""
    incoming = points[1:-1] - points[:-2]
    outgoing = points[2:] - points[1:-1]
    norm_in = np.linalg.norm(incoming, axis=1)
    norm_out = np.linalg.norm(outgoing, axis=1)
    dot = (incoming * outgoing).sum(axis=1)
    degenerate = (norm_in == 0) | (norm_out == 0)
    with np.errstate(divide='ignore', invalid='ignore'):
        cosine = dot / (norm_in * norm_out)
    # Repeated positions count as straight continuation.
    cosine = np.clip(np.where(degenerate, 1.0, cosine), -1.0, 1.0)
    return 1.0 / np.maximum(1.0 + cosine, clamps.direction_clamp)


def direction_coefficient(filtered: Trajectory, index: int,
                          clamps: CoefficientClamps = DEFAULT_CLAMPS) -> float:
    """
    Direction-based information coefficient 1 / (1 + cos(v1, v2)) of one point

    v1 and v2 are the incoming and outgoing segment vectors. Endpoints have
    no incoming or outgoing segment and score 0.
    """
    n = len(filtered)
    NeighborhoodWindow.around(index, 1, n)
    if index == 0 or index == n - 1:
        return 0.0
    return float(_direction_scores(filtered.points[index - 1:index + 2], clamps)[0])


def compute_coefficients(filtered: Trajectory, params: SimplifyParams,
                         clamps: CoefficientClamps = DEFAULT_CLAMPS) -> CoefficientSeries:
    """
    Score every point of the filtered trajectory

    Args:
        filtered: smoothed trajectory
        params: selects the coefficient kind (and beta for correlation)
        clamps: degenerate-case guards

    Returns:
        One finite, non-negative score per point
    """
    n = len(filtered)
    if params.coefficient is CoefficientKind.CORRELATION:
        values = _correlation_scores(filtered, params.beta, np.arange(n), clamps)
    else:
        values = np.zeros(n)
        if n > 2:
            values[1:-1] = _direction_scores(filtered.points, clamps)
    return CoefficientSeries(values)


def window_maxima(values: np.ndarray, gamma: int) -> np.ndarray:
    """Maximum of values[..., max(0, i - gamma) : min(i + gamma, n - 1) + 1] for every i, along the last axis"""
    values = np.asarray(values, dtype=np.float64)
    pad = [(0, 0)] * (values.ndim - 1) + [(gamma, gamma)]
    padded = np.pad(values, pad, constant_values=-np.inf)
    return sliding_window_view(padded, 2 * gamma + 1, axis=-1).max(axis=-1)


def suppression_mask(values: np.ndarray, gamma: int) -> np.ndarray:
    """
    Keep mask of non-maxima suppression along the last axis

    True where a value equals its window maximum, and at both ends.
    """
    if gamma < 1:
        raise ValueError(f"gamma must be >= 1, got {gamma}")
    values = np.asarray(values, dtype=np.float64)
    keep = values == window_maxima(values, gamma)
    keep[..., 0] = True
    keep[..., -1] = True
    return keep


def select_points(filtered: Trajectory, coefficients: CoefficientSeries, gamma: int) -> SimplifyResult:
    """
    Non-maxima suppression over the gamma-neighborhood, endpoints always kept

    A point survives when its coefficient equals the maximum of its window,
    so every member of a tie is kept.

    Args:
        filtered: smoothed trajectory the coefficients were computed on
        coefficients: aligned per-point scores
        gamma: half-window of the suppression

    Returns:
        SimplifyResult whose points come from the filtered trajectory
    """
    n = len(filtered)
    if len(coefficients) != n:
        raise DimensionMismatch(
            f"{len(coefficients)} coefficients for a trajectory of {n} points"
        )
    kept = np.flatnonzero(suppression_mask(coefficients.values, gamma))
    return SimplifyResult(
        simplified=filtered.subset(kept),
        kept_indices=kept,
        coefficients=coefficients,
        source_count=n,
    )


def simplify(trajectory: Trajectory, params: SimplifyParams,
             clamps: CoefficientClamps = DEFAULT_CLAMPS) -> SimplifyResult:
    """
    Run the full open-loop pipeline: filter, score, suppress

    Args:
        trajectory: validated input
        params: neighborhood sizes and coefficient kind

    Returns:
        SimplifyResult with indices into the filtered trajectory
    """
    filtered = moving_average_filter(trajectory, params.alpha)
    coefficients = compute_coefficients(filtered, params, clamps)
    result = select_points(filtered, coefficients, params.gamma)
    logger.debug(
        f"Simplified {len(trajectory)} -> {result.kept_count} points "
        f"({params.coefficient.value}, alpha={params.alpha}, beta={params.beta}, gamma={params.gamma})"
    )
    return result


class FastSTray:
    """Simplifier bound to one parameter set"""

    def __init__(self, params: SimplifyParams = None, clamps: CoefficientClamps = DEFAULT_CLAMPS):
        self.params = params or SimplifyParams()
        self.clamps = clamps

    def simplify(self, trajectory: Trajectory) -> SimplifyResult:
        return simplify(trajectory, self.params, self.clamps)

    def fit(self, trajectory: Trajectory):
        """
        Simplify and fit the interpolating spline through the kept points

        Returns:
            (SimplifyResult, CubicSpline)
        """
        from ..interpolation.spline import fit_spline

        result = self.simplify(trajectory)
        return result, fit_spline(result.simplified)
