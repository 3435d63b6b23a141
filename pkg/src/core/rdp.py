"""
Ramer-Douglas-Peucker baseline (closed-loop contrast to FastSTray)
"""
import logging

import numpy as np

from .trajectory import CoefficientSeries, SimplifyResult, Trajectory

logger = logging.getLogger(__name__)


def segment_distances(points: np.ndarray, start: np.ndarray, end: np.ndarray) -> np.ndarray:
    """
    Euclidean distance from each point to the segment [start, end], any dimension

    Args:
        points: (K, D) query points
        start: (D,) first segment endpoint
        end: (D,) second segment endpoint

    Returns:
        (K,) distances
    """
    chord = end - start
    length_sq = float(chord @ chord)
    offsets = points - start
    if length_sq == 0.0:
        return np.linalg.norm(offsets, axis=1)
    u = np.clip(offsets @ chord / length_sq, 0.0, 1.0)
    return np.linalg.norm(offsets - u[:, None] * chord, axis=1)


def rdp_simplify(trajectory: Trajectory, epsilon: float) -> SimplifyResult:
    """
    Keep the farthest point of each chord while it deviates more than epsilon

    Recursion is unrolled onto an explicit stack. Ties for the farthest point
    go to the lower index. The diagnostic coefficients hold, per point, the
    distance that decided its fate: the split distance for kept interior points
    and the distance to the final enclosing chord for dropped ones.

    Args:
        trajectory: input samples (not smoothed)
        epsilon: tolerance in position units, >= 0

    Returns:
        SimplifyResult with indices into the input trajectory
    """
    if epsilon < 0:
        raise ValueError(f"epsilon must be >= 0, got {epsilon}")

    points = trajectory.points
    n = len(points)
    keep = np.zeros(n, dtype=bool)
    keep[0] = keep[-1] = True
    deviation = np.zeros(n)

    stack = [(0, n - 1)]
    while stack:
        first, last = stack.pop()
        if last - first < 2:
            continue
        distances = segment_distances(points[first + 1:last], points[first], points[last])
        farthest = int(np.argmax(distances))
        d_max = float(distances[farthest])
        if d_max > epsilon:
            split = first + 1 + farthest
            keep[split] = True
            deviation[split] = d_max
            stack.append((split, last))
            stack.append((first, split))
        else:
            deviation[first + 1:last] = distances

    kept = np.flatnonzero(keep)
    logger.debug(f"RDP epsilon={epsilon}: {n} -> {len(kept)} points")
    return SimplifyResult(
        simplified=trajectory.subset(kept),
        kept_indices=kept,
        coefficients=CoefficientSeries(deviation),
        source_count=n,
    )
