"""
CLI commands. Every number they print comes from a library call; this layer
only loads input, dispatches and writes output.

Exit codes: 0 success, 1 invalid input or usage, 2 I/O failure.
"""
import logging
import sys
from typing import Optional, Sequence

from ..analytics.benchmark import run_benchmark
from ..analytics.chart_generator import TrajectoryChart
from ..analytics.metrics import evaluate_baseline, evaluate_simplification
from ..analytics.sweep import format_sweep_table, sweep_gamma
from ..core.errors import TrajectoryError
from ..core.trajectory import CoefficientKind, Trajectory
from ..ingest.csv_reader import parse_csv
from ..ingest.geolife import drop_duplicate_timestamps, haversine_distance, parse_plt, project_to_local
from ..ingest.writer import write_plot_data, write_result
from ..interpolation.spline import sample_uniform
from .parser import RunConfig, parse_run_config

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_IO = 2


def load_trajectory(config: RunConfig) -> Trajectory:
    """Read and validate the input file named by the run config"""
    with open(config.input_path, 'r', encoding='utf-8', newline='') as f:
        if config.input_format == 'csv':
            trajectory = parse_csv(f, config.columns, config.has_header)
        else:
            geo = drop_duplicate_timestamps(parse_plt(f))
            if len(geo) > 1:
                length = sum(haversine_distance(a, b) for a, b in zip(geo, geo[1:]))
                logger.info(f"GPS track: {len(geo)} fixes, {length:.0f} m")
            trajectory = project_to_local(geo)
    logger.info(f"Loaded {len(trajectory)} points ({trajectory.dimension}D) from {config.input_path}")
    return trajectory


def _write_text(path: Optional[str], text: str):
    if path:
        with open(path, 'w', encoding='utf-8', newline='') as f:
            f.write(text)
    else:
        sys.stdout.write(text)
        sys.stdout.flush()


def _chart() -> Optional[TrajectoryChart]:
    try:
        return TrajectoryChart()
    except ImportError:
        logger.warning("matplotlib is not installed; skipping --plot")
        return None


def _run_guarded(command, config: RunConfig) -> int:
    try:
        command(config)
        return EXIT_OK
    except TrajectoryError as e:
        logger.error(f"{config.command} failed: {e}")
        return EXIT_INVALID
    except OSError as e:
        logger.error(f"{config.command} failed: {e}")
        return EXIT_IO
    except Exception as e:
        logger.error(f"Unexpected error in {config.command}: {e}", exc_info=True)
        return EXIT_INVALID


def _warn_unused_beta(config: RunConfig):
    if config.beta_given and config.params.coefficient is CoefficientKind.DIRECTION:
        logger.warning("--beta has no effect with the direction coefficient")


def _simplify(config: RunConfig):
    _warn_unused_beta(config)
    trajectory = load_trajectory(config)
    result, spline, report = evaluate_simplification(
        trajectory, config.params, config.clamps,
        config.diameter_exact_limit, config.pivot_tolerance,
    )
    samples = sample_uniform(spline, config.sample_count)

    if config.output_path:
        with open(config.output_path, 'wb') as f:
            write_result(result, samples, report, f)
    else:
        write_result(result, samples, report, sys.stdout.buffer)
        sys.stdout.buffer.flush()

    if config.plot_data_path:
        with open(config.plot_data_path, 'w', encoding='utf-8', newline='') as f:
            write_plot_data(trajectory, spline, f)
    if config.plot_path:
        chart = _chart()
        if chart:
            chart.render_overlay(trajectory, result, spline, config.plot_path)


def _sweep(config: RunConfig):
    _warn_unused_beta(config)
    trajectory = load_trajectory(config)
    reports = sweep_gamma(
        trajectory, config.params, config.sweep, config.clamps,
        config.workers, config.diameter_exact_limit, config.pivot_tolerance,
    )
    baseline = None
    if config.baseline_epsilon is not None:
        _, _, baseline = evaluate_baseline(
            trajectory, config.baseline_epsilon, config.diameter_exact_limit, config.pivot_tolerance
        )
    _write_text(config.output_path, format_sweep_table(reports, baseline))

    if config.plot_path:
        chart = _chart()
        if chart:
            chart.render_sweep(reports, config.plot_path)


def _bench(config: RunConfig):
    source = load_trajectory(config) if config.input_path else None
    result = run_benchmark(
        config.bench_sizes, config.params, config.bench_repeats,
        source=source, clamps=config.clamps,
    )
    _write_text(config.output_path, result.format_table())


def cmd_simplify(config: RunConfig) -> int:
    """Simplify one trajectory and write the result document"""
    return _run_guarded(_simplify, config)


def cmd_sweep(config: RunConfig) -> int:
    """Evaluate every gamma of the sweep list and write the table"""
    return _run_guarded(_sweep, config)


def cmd_bench(config: RunConfig) -> int:
    """Time simplify at each benchmark size and write timings plus growth exponents"""
    return _run_guarded(_bench, config)


COMMANDS = {
    'simplify': cmd_simplify,
    'sweep': cmd_sweep,
    'bench': cmd_bench,
}


def apply_log_settings(config: RunConfig):
    """Apply LOG_LEVEL and LOG_FILE on top of the handlers main.py installed"""
    root = logging.getLogger()
    root.setLevel(config.log_level)
    if config.log_file and not any(
        isinstance(h, logging.FileHandler) and h.baseFilename.endswith(config.log_file)
        for h in root.handlers
    ):
        handler = logging.FileHandler(config.log_file)
        handler.setFormatter(logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s'))
        root.addHandler(handler)


def run(argv: Sequence[str]) -> int:
    """
    Parse argv, run the selected command and return its exit code

    Args:
        argv: arguments without the program name

    Returns:
        0 on success, 1 for invalid input or usage, 2 for I/O failures
    """
    try:
        config = parse_run_config(argv)
    except TrajectoryError as e:
        logger.error(f"Invalid arguments: {e}")
        return EXIT_INVALID
    except OSError as e:
        logger.error(f"Could not read configuration: {e}")
        return EXIT_IO
    apply_log_settings(config)
    return COMMANDS[config.command](config)
