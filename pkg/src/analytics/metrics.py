"""
Evaluation metrics: synchronous error, reduction and relative error, plus
timed end-to-end runs of the simplifier and of the RDP baseline
"""
import logging
import time
from dataclasses import asdict, dataclass
from typing import Optional, Tuple

import numpy as np

from ..core.faststray import DEFAULT_CLAMPS, CoefficientClamps, simplify
from ..core.rdp import rdp_simplify
from ..core.trajectory import SimplifyParams, SimplifyResult, Trajectory
from ..interpolation.spline import CubicSpline, evaluate_batch, fit_spline
from ..interpolation.tridiagonal import PIVOT_TOLERANCE

logger = logging.getLogger(__name__)

DIAMETER_EXACT_LIMIT = 20000


@dataclass(frozen=True)
class EvaluationReport:
    """Metrics of one simplification run"""
    alpha: int
    beta: int
    gamma: int
    coefficient: str
    original_count: int
    simplified_count: int
    reduction_percent: float
    synchronous_error: float
    relative_error_percent: float
    diameter: float
    diameter_approximate: bool
    simplify_runtime: float
    spline_runtime: float

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class BaselineReport:
    """Metrics of one RDP run, comparable to EvaluationReport"""
    epsilon: float
    simplified_count: int
    reduction_percent: float
    synchronous_error: float
    relative_error_percent: float
    runtime: float


def synchronous_error(original: Trajectory, spline: CubicSpline) -> float:
    """
    Mean distance between each original sample and the spline at the same timestamp

    Args:
        original: unsimplified trajectory
        spline: spline fitted on a simplification of it (same time base)

    Returns:
        Mean Euclidean distance in position units
    """
    predicted = evaluate_batch(spline, original.timestamps)
    return float(np.mean(np.linalg.norm(original.points - predicted, axis=1)))


def reduction_percent(original_count: int, simplified_count: int) -> float:
    """Share of samples removed, in percent"""
    if not 2 <= simplified_count <= original_count:
        raise ValueError(
            f"need 2 <= simplified ({simplified_count}) <= original ({original_count})"
        )
    return 100 * (original_count - simplified_count) / original_count


def trajectory_diameter(points: np.ndarray, exact_limit: int = DIAMETER_EXACT_LIMIT) -> Tuple[float, bool]:
    """
    Largest distance between any two points

    Exact O(N^2) scan that stops once the bounding-box diagonal is reached.
    Above exact_limit points the diagonal itself is returned.

    Returns:
        (diameter, approximate)
    """
    points = np.asarray(points, dtype=np.float64)
    diagonal = float(np.linalg.norm(points.max(axis=0) - points.min(axis=0)))
    n = len(points)
    if n > exact_limit:
        logger.warning(
            f"{n} points exceed the exact diameter limit ({exact_limit}); using the bounding-box diagonal"
        )
        return diagonal, True

    best_sq = 0.0
    bound_sq = diagonal * diagonal
    for i in range(n - 1):
        diff = points[i + 1:] - points[i]
        row_max = float(np.einsum('ij,ij->i', diff, diff).max())
        if row_max > best_sq:
            best_sq = row_max
            if best_sq >= bound_sq:
                break
    return float(np.sqrt(best_sq)), False


def relative_error_percent(original: Trajectory, synchronous_error: float,
                           diameter: Optional[float] = None,
                           exact_limit: int = DIAMETER_EXACT_LIMIT) -> float:
    """
    100 * error / diameter of the original trajectory

    A trajectory with zero extent has zero relative error.
    """
    if diameter is None:
        diameter, _ = trajectory_diameter(original.points, exact_limit)
    if diameter == 0:
        return 0.0
    return 100.0 * synchronous_error / diameter


def evaluate_simplification(trajectory: Trajectory, params: SimplifyParams,
                            clamps: CoefficientClamps = DEFAULT_CLAMPS,
                            exact_limit: int = DIAMETER_EXACT_LIMIT,
                            pivot_tolerance: float = PIVOT_TOLERANCE
                            ) -> Tuple[SimplifyResult, CubicSpline, EvaluationReport]:
    """
    Simplify, fit the spline and measure; I/O is not timed

    Returns:
        (result, spline, report)
    """
    started = time.perf_counter()
    result = simplify(trajectory, params, clamps)
    simplified_at = time.perf_counter()
    spline = fit_spline(result.simplified, pivot_tolerance)
    fitted_at = time.perf_counter()

    error = synchronous_error(trajectory, spline)
    diameter, approximate = trajectory_diameter(trajectory.points, exact_limit)
    report = EvaluationReport(
        alpha=params.alpha,
        beta=params.beta,
        gamma=params.gamma,
        coefficient=params.coefficient.value,
        original_count=len(trajectory),
        simplified_count=result.kept_count,
        reduction_percent=reduction_percent(len(trajectory), result.kept_count),
        synchronous_error=error,
        relative_error_percent=relative_error_percent(trajectory, error, diameter),
        diameter=diameter,
        diameter_approximate=approximate,
        simplify_runtime=simplified_at - started,
        spline_runtime=fitted_at - simplified_at,
    )
    logger.info(
        f"gamma={params.gamma}: {report.original_count} -> {report.simplified_count} points, "
        f"reduction {report.reduction_percent:.2f}%, error {report.synchronous_error:.4g}, "
        f"relative {report.relative_error_percent:.3f}%"
    )
    return result, spline, report


def evaluate_baseline(trajectory: Trajectory, epsilon: float,
                      exact_limit: int = DIAMETER_EXACT_LIMIT,
                      pivot_tolerance: float = PIVOT_TOLERANCE
                      ) -> Tuple[SimplifyResult, CubicSpline, BaselineReport]:
    """RDP run measured with the same spline reconstruction and metrics"""
    started = time.perf_counter()
    result = rdp_simplify(trajectory, epsilon)
    runtime = time.perf_counter() - started
    spline = fit_spline(result.simplified, pivot_tolerance)
    error = synchronous_error(trajectory, spline)
    report = BaselineReport(
        epsilon=epsilon,
        simplified_count=result.kept_count,
        reduction_percent=reduction_percent(len(trajectory), result.kept_count),
        synchronous_error=error,
        relative_error_percent=relative_error_percent(trajectory, error, exact_limit=exact_limit),
        runtime=runtime,
    )
    logger.info(
        f"RDP epsilon={epsilon}: {len(trajectory)} -> {report.simplified_count} points, "
        f"error {report.synchronous_error:.4g}"
    )
    return result, spline, report
