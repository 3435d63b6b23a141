"""
Runtime scaling of the simplifier: wall time at growing sizes and the fitted
log-log growth exponent
"""
import dataclasses
import logging
import time
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

import numpy as np

from ..core.errors import ConfigError
from ..core.faststray import DEFAULT_CLAMPS, CoefficientClamps, simplify
from ..core.trajectory import CoefficientKind, SimplifyParams, Trajectory
from .synthetic import smooth_hand_trajectory

logger = logging.getLogger(__name__)

MIN_BENCH_SIZE = 3


@dataclass
class BenchmarkResult:
    """Per-size timings (seconds) for each coefficient kind"""
    sizes: List[int]
    timings: Dict[str, List[float]] = field(default_factory=dict)
    exponents: Dict[str, Optional[float]] = field(default_factory=dict)

    def format_table(self) -> str:
        kinds = list(self.timings)
        lines = [','.join(['n'] + [f"{k}_seconds" for k in kinds])]
        for i, n in enumerate(self.sizes):
            lines.append(','.join([str(n)] + [f"{self.timings[k][i]:.6g}" for k in kinds]))
        for k in kinds:
            exponent = self.exponents.get(k)
            text = 'n/a' if exponent is None else f"{exponent:.3f}"
            lines.append(f"# growth_exponent_{k},{text}")
        return '\n'.join(lines) + '\n'


def growth_exponent(sizes: Sequence[int], seconds: Sequence[float]) -> Optional[float]:
    """Slope of log(time) against log(size); None with fewer than two sizes"""
    if len(sizes) < 2:
        return None
    slope, _ = np.polyfit(np.log(np.asarray(sizes, dtype=np.float64)),
                          np.log(np.maximum(np.asarray(seconds, dtype=np.float64), 1e-12)), 1)
    return float(slope)


def time_simplify(trajectory: Trajectory, params: SimplifyParams, repeats: int = 3,
                  clamps: CoefficientClamps = DEFAULT_CLAMPS) -> float:
    """Median wall time of `repeats` simplify runs"""
    samples = []
    for _ in range(max(1, repeats)):
        started = time.perf_counter()
        simplify(trajectory, params, clamps)
        samples.append(time.perf_counter() - started)
    return float(np.median(samples))


def run_benchmark(sizes: Sequence[int], params: SimplifyParams = None, repeats: int = 3,
                  kinds: Sequence[CoefficientKind] = (CoefficientKind.DIRECTION, CoefficientKind.CORRELATION),
                  source: Trajectory = None, seed: int = 0,
                  clamps: CoefficientClamps = DEFAULT_CLAMPS) -> BenchmarkResult:
    """
    Time simplify at every size for every coefficient kind

    Args:
        sizes: trajectory lengths, each >= 3
        params: alpha, beta, gamma (coefficient is overridden per kind)
        source: when given, prefixes of this trajectory are timed instead of
            synthetic smooth trajectories
        seed: synthetic generator seed

    Returns:
        BenchmarkResult with timings and growth exponents
    """
    sizes = [int(n) for n in sizes]
    if not sizes:
        raise ConfigError("benchmark needs at least one size")
    if any(n < MIN_BENCH_SIZE for n in sizes):
        raise ConfigError(f"benchmark sizes must be >= {MIN_BENCH_SIZE}, got {sizes}")
    if source is not None and max(sizes) > len(source):
        raise ConfigError(f"benchmark size {max(sizes)} exceeds the input length {len(source)}")

    params = params or SimplifyParams()
    result = BenchmarkResult(sizes=sizes)
    for kind in kinds:
        result.timings[kind.value] = []
    for n in sizes:
        if source is not None:
            trajectory = source.subset(np.arange(n))
        else:
            trajectory = smooth_hand_trajectory(n, seed=seed, cycles=1.5)
        for kind in kinds:
            seconds = time_simplify(trajectory, dataclasses.replace(params, coefficient=kind), repeats, clamps)
            result.timings[kind.value].append(seconds)
            logger.info(f"n={n} {kind.value}: {seconds:.4f}s")
    for kind in kinds:
        result.exponents[kind.value] = growth_exponent(sizes, result.timings[kind.value])
    return result
