"""
Natural cubic spline through the kept points, one polynomial per segment
and coordinate.

The interior accelerations come from the standard tridiagonal system
    h[k-1] psi[k-1] + 2 (h[k-1] + h[k]) psi[k] + h[k] psi[k+1] = 6 (s[k] - s[k-1])
with psi[0] = psi[M-1] = 0, where h are knot spacings and s segment slopes.
"""
import logging
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ..core.errors import DimensionMismatch, EmptyTrajectory
from ..core.trajectory import Trajectory
from .tridiagonal import PIVOT_TOLERANCE, TridiagonalSystem, solve_tridiagonal

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class CubicSpline:
    """
    Piecewise cubic Pi_k(t) = a + b h + c h^2 + d h^3 with h = t - knots[k].

    Attributes:
        knots: (M,) strictly increasing timestamps
        coefficients: (D, M - 1, 4) polynomial coefficients [a, b, c, d]
        accelerations: (M, D) second derivative at every knot
    """
    knots: np.ndarray
    coefficients: np.ndarray
    accelerations: np.ndarray

    def __post_init__(self):
        for name in ('knots', 'coefficients', 'accelerations'):
            array = np.array(getattr(self, name), dtype=np.float64)
            array.setflags(write=False)
            object.__setattr__(self, name, array)
        if len(self.knots) < 2:
            raise EmptyTrajectory("a spline needs at least 2 knots")
        if self.coefficients.shape[1:] != (len(self.knots) - 1, 4):
            raise DimensionMismatch(
                f"coefficients of shape {self.coefficients.shape} do not match {len(self.knots)} knots"
            )

    @property
    def dimension(self) -> int:
        return self.coefficients.shape[0]

    @property
    def segment_count(self) -> int:
        return len(self.knots) - 1

    def __call__(self, t: float) -> np.ndarray:
        return evaluate(self, t)


def build_spline_system(knots: np.ndarray, values: np.ndarray) -> TridiagonalSystem:
    """
    Natural-spline system A psi = b for all coordinates at once

    Args:
        knots: (M,) strictly increasing times
        values: (M, D) positions at the knots

    Returns:
        M x M system with a (M, D) right-hand side
    """
    m = len(knots)
    h = np.diff(knots)
    slopes = np.diff(values, axis=0) / h[:, None]

    diag = np.ones(m)
    sub = np.zeros(m - 1)
    sup = np.zeros(m - 1)
    rhs = np.zeros((m, values.shape[1]))
    if m > 2:
        diag[1:-1] = 2.0 * (h[:-1] + h[1:])
        sub[:-1] = h[:-1]
        sup[1:] = h[1:]
        rhs[1:-1] = 6.0 * (slopes[1:] - slopes[:-1])
    return TridiagonalSystem(sub=sub, diag=diag, sup=sup, rhs=rhs)


def fit_spline(kept: Trajectory, pivot_tolerance: float = PIVOT_TOLERANCE) -> CubicSpline:
    """
    Interpolating natural cubic spline through a (simplified) trajectory

    Two points give the straight segment between them.

    Args:
        kept: M >= 2 samples with strictly increasing timestamps

    Returns:
        CubicSpline with M - 1 segments per coordinate
    """
    knots = kept.timestamps
    values = kept.points
    h = np.diff(knots)
    slopes = np.diff(values, axis=0) / h[:, None]

    system = build_spline_system(knots, values)
    assert system.is_diagonally_dominant()
    psi = solve_tridiagonal(system, pivot_tolerance)

    a = values[:-1]
    b = slopes - h[:, None] * (2.0 * psi[:-1] + psi[1:]) / 6.0
    c = psi[:-1] / 2.0
    d = (psi[1:] - psi[:-1]) / (6.0 * h[:, None])
    coefficients = np.stack([a, b, c, d], axis=-1).transpose(1, 0, 2)
    logger.debug(f"Fitted spline with {len(knots)} knots in {kept.dimension}D")
    return CubicSpline(knots=knots, coefficients=coefficients, accelerations=psi)


def _evaluate_segments(spline: CubicSpline, segments: np.ndarray, times: np.ndarray) -> np.ndarray:
    h = times - spline.knots[segments]
    coef = spline.coefficients[:, segments, :]
    values = coef[..., 0] + h * (coef[..., 1] + h * (coef[..., 2] + h * coef[..., 3]))
    return values.T


def evaluate(spline: CubicSpline, t: float) -> np.ndarray:
    """
    Position at time t; outside the knot range the boundary polynomial is extended

    Returns:
        (D,) position
    """
    k = int(np.searchsorted(spline.knots, t, side='right')) - 1
    k = min(max(k, 0), spline.segment_count - 1)
    return _evaluate_segments(spline, np.array([k]), np.array([t], dtype=np.float64))[0]


def evaluate_batch(spline: CubicSpline, times: Sequence[float]) -> np.ndarray:
    """
    Positions at ascending times, locating segments with one merged sweep

    Args:
        spline: fitted spline
        times: non-decreasing query times

    Returns:
        (len(times), D) positions, identical to calling evaluate per time
    """
    times = np.asarray(times, dtype=np.float64)
    if times.size == 0:
        return np.empty((0, spline.dimension))
    if np.any(np.diff(times) < 0):
        raise ValueError("evaluate_batch requires times sorted ascending")

    knots = spline.knots
    last = spline.segment_count - 1
    segments = np.empty(len(times), dtype=np.intp)
    k = 0
    for i, t in enumerate(times):
        while k < last and t >= knots[k + 1]:
            k += 1
        segments[i] = k
    return _evaluate_segments(spline, segments, times)


def sample_uniform(spline: CubicSpline, count: int):
    """
    Evaluate the spline at `count` evenly spaced times across its knot range

    Returns:
        (times, positions)
    """
    if count <= 0:
        return np.empty(0), np.empty((0, spline.dimension))
    if count == 1:
        times = spline.knots[:1].copy()
    else:
        times = np.linspace(spline.knots[0], spline.knots[-1], count)
    return times, evaluate_batch(spline, times)
