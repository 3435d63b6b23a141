"""
Result documents and plot data.

The result document is UTF-8 JSON; its layout is described in
docs/result_format.md. Real numbers carry 9 significant digits.
"""
import json
import logging
from typing import BinaryIO, Optional, Sequence, TextIO, Tuple

import numpy as np

from ..core.trajectory import SimplifyResult, Trajectory
from ..interpolation.spline import CubicSpline, evaluate_batch

logger = logging.getLogger(__name__)

FORMAT_NAME = "faststray-result"
FORMAT_VERSION = 1
SIGNIFICANT_DIGITS = 9


def _num(value: float) -> float:
    return float(f"{float(value):.{SIGNIFICANT_DIGITS}g}")


def _vector(values) -> list:
    return [_num(v) for v in np.ravel(values)]


def _rows(values) -> list:
    return [_vector(row) for row in np.asarray(values)]


def build_result_document(result: SimplifyResult,
                          report,
                          spline_samples: Optional[Tuple[Sequence[float], Sequence]] = None) -> dict:
    """
    Assemble the result document as plain data

    Args:
        result: simplification output
        report: EvaluationReport of the same run
        spline_samples: optional (times, positions) of the fitted spline

    Returns:
        JSON-ready dict
    """
    document = {
        'format': FORMAT_NAME,
        'version': FORMAT_VERSION,
        'parameters': {
            'alpha': report.alpha,
            'beta': report.beta,
            'gamma': report.gamma,
            'coefficient': report.coefficient,
        },
        'original_count': report.original_count,
        'simplified_count': report.simplified_count,
        'kept_indices': [int(i) for i in result.kept_indices],
        'kept_points': {
            't': _vector(result.simplified.timestamps),
            'positions': _rows(result.simplified.points),
        },
        'metrics': {
            'reduction_percent': _num(report.reduction_percent),
            'synchronous_error': _num(report.synchronous_error),
            'relative_error_percent': _num(report.relative_error_percent),
            'diameter': _num(report.diameter),
            'diameter_approximate': bool(report.diameter_approximate),
            'simplify_runtime': _num(report.simplify_runtime),
            'spline_runtime': _num(report.spline_runtime),
        },
    }
    if spline_samples is not None and len(spline_samples[0]) > 0:
        times, positions = spline_samples
        document['samples'] = {
            't': _vector(times),
            'positions': _rows(positions),
        }
    return document


def write_result(result: SimplifyResult, spline_samples, report, destination: BinaryIO):
    """Write the result document to a byte sink"""
    document = build_result_document(result, report, spline_samples)
    destination.write(json.dumps(document, indent=2).encode('utf-8'))
    destination.write(b'\n')
    logger.debug(f"Wrote result document with {report.simplified_count} kept points")


def write_plot_data(original: Trajectory, spline: CubicSpline, destination: TextIO):
    """
    Columnar text for external plotters: time, original position, spline position

    One row per original sample, whitespace separated, '#' header line.
    """
    axes = ['x', 'y', 'z'][:original.dimension]
    header = ['t'] + axes + [f"spline_{a}" for a in axes]
    destination.write('# ' + ' '.join(header) + '\n')
    predicted = evaluate_batch(spline, original.timestamps)
    for t, p, q in zip(original.timestamps, original.points, predicted):
        values = [t, *p, *q]
        destination.write(' '.join(f"{float(v):.{SIGNIFICANT_DIGITS}g}" for v in values) + '\n')
