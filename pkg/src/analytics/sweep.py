"""
Gamma sweep: one evaluated run per suppression window size, reported as a
table with one row per gamma
"""
import csv
import dataclasses
import io
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Sequence

from ..core.errors import ConfigError
from ..core.faststray import DEFAULT_CLAMPS, CoefficientClamps
from ..core.trajectory import SimplifyParams, Trajectory
from ..interpolation.tridiagonal import PIVOT_TOLERANCE
from .metrics import DIAMETER_EXACT_LIMIT, BaselineReport, EvaluationReport, evaluate_simplification

logger = logging.getLogger(__name__)

SWEEP_COLUMNS = [
    'alpha', 'beta', 'gamma', 'coefficient',
    'original_count', 'simplified_count', 'reduction_percent',
    'synchronous_error', 'relative_error_percent',
    'simplify_runtime', 'spline_runtime',
]
BASELINE_COLUMNS = [
    'rdp_epsilon', 'rdp_simplified_count', 'rdp_reduction_percent',
    'rdp_synchronous_error', 'rdp_relative_error_percent', 'rdp_runtime',
]


def sweep_gamma(trajectory: Trajectory, params: SimplifyParams, gammas: Sequence[int],
                clamps: CoefficientClamps = DEFAULT_CLAMPS, workers: int = 1,
                exact_limit: int = DIAMETER_EXACT_LIMIT,
                pivot_tolerance: float = PIVOT_TOLERANCE) -> List[EvaluationReport]:
    """
    Evaluate the pipeline once per gamma, other parameters fixed

    Args:
        trajectory: input samples
        params: alpha, beta and coefficient kind; its gamma is ignored
        gammas: suppression half-windows, each >= 1
        workers: thread count; results come back in the order of gammas

    Returns:
        One EvaluationReport per gamma
    """
    gammas = list(gammas)
    if not gammas:
        raise ConfigError("the gamma sweep needs at least one value")
    bad = [g for g in gammas if int(g) != g or g < 1]
    if bad:
        raise ConfigError(f"gamma values must be integers >= 1, got {bad}")

    def run(gamma: int) -> EvaluationReport:
        _, _, report = evaluate_simplification(
            trajectory, dataclasses.replace(params, gamma=int(gamma)), clamps, exact_limit, pivot_tolerance
        )
        return report

    if workers > 1 and len(gammas) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(run, gammas))
    else:
        reports = [run(g) for g in gammas]
    logger.info(f"Sweep over gamma={gammas} finished")
    return reports


def format_sweep_table(reports: Sequence[EvaluationReport],
                       baseline: Optional[BaselineReport] = None) -> str:
    """
    Comma-delimited table with a fixed header row

    With a baseline, every row gains the RDP columns (the baseline does not
    depend on gamma).
    """
    out = io.StringIO()
    writer = csv.writer(out, lineterminator='\n')
    header = SWEEP_COLUMNS + (BASELINE_COLUMNS if baseline else [])
    writer.writerow(header)
    for report in reports:
        values = report.to_dict()
        row = [_cell(values[c]) for c in SWEEP_COLUMNS]
        if baseline:
            row += [_cell(v) for v in (
                baseline.epsilon, baseline.simplified_count, baseline.reduction_percent,
                baseline.synchronous_error, baseline.relative_error_percent, baseline.runtime,
            )]
        writer.writerow(row)
    return out.getvalue()


def _cell(value) -> str:
    if isinstance(value, float):
        return f"{value:.9g}"
    return str(value)
