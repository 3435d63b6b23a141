"""
Command-line parsing: flags, config-file fallbacks and the resolved RunConfig
"""
import argparse
import dataclasses
import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

from ..core.errors import ConfigError
from ..core.faststray import DEFAULT_CLAMPS, MIN_CORRELATION_WINDOW, CoefficientClamps
from ..core.trajectory import CoefficientKind, SimplifyParams
from ..analytics.metrics import DIAMETER_EXACT_LIMIT
from ..ingest.csv_reader import ColumnSpec
from ..interpolation.tridiagonal import PIVOT_TOLERANCE
from ..utils.config import Config, parse_int_list

logger = logging.getLogger(__name__)

COMMANDS = ('simplify', 'sweep', 'bench')
INPUT_FORMATS = ('csv', 'plt')


class CliArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that raises ConfigError instead of exiting with status 2"""

    def error(self, message):
        raise ConfigError(message)


@dataclass
class RunConfig:
    """Everything one CLI invocation needs, flags and config already merged"""
    command: str
    input_path: Optional[str] = None
    input_format: str = 'csv'
    columns: ColumnSpec = field(default_factory=ColumnSpec)
    has_header: bool = False
    params: SimplifyParams = field(default_factory=SimplifyParams)
    output_path: Optional[str] = None
    sweep: Optional[List[int]] = None
    baseline_epsilon: Optional[float] = None
    sample_count: int = 0
    bench_sizes: List[int] = field(default_factory=list)
    bench_repeats: int = 3
    plot_data_path: Optional[str] = None
    plot_path: Optional[str] = None
    workers: int = 1
    clamps: CoefficientClamps = DEFAULT_CLAMPS
    pivot_tolerance: float = PIVOT_TOLERANCE
    diameter_exact_limit: int = DIAMETER_EXACT_LIMIT
    beta_given: bool = False
    log_level: str = 'INFO'
    log_file: str = ''

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ConfigError(f"unknown command {self.command!r}")
        if self.input_format not in INPUT_FORMATS:
            raise ConfigError(f"input format must be csv or plt, got {self.input_format!r}")
        if self.sample_count < 0:
            raise ConfigError(f"sample count must be >= 0, got {self.sample_count}")
        if self.workers < 1:
            raise ConfigError(f"workers must be >= 1, got {self.workers}")
        if self.baseline_epsilon is not None and self.baseline_epsilon < 0:
            raise ConfigError(f"baseline epsilon must be >= 0, got {self.baseline_epsilon}")
        if self.command in ('simplify', 'sweep') and not self.input_path:
            raise ConfigError(f"{self.command} needs --input")


def build_parser() -> CliArgumentParser:
    common = CliArgumentParser(add_help=False)
    source = common.add_argument_group('Input')
    source.add_argument('--input', help='trajectory file')
    source.add_argument('--format', choices=INPUT_FORMATS, default='csv', help='input format')
    source.add_argument('--columns', default=None, help='CSV column indices t:x:y[:z]')
    source.add_argument('--header', action='store_true', help='CSV input has a header row')
    source.add_argument('--config', default='config.env', help='dotenv file with defaults')

    params = common.add_argument_group('Simplification')
    params.add_argument('--alpha', type=int, default=None, help='moving-average half-window')
    params.add_argument('--beta', type=int, default=None, help='correlation half-window')
    params.add_argument('--gamma', type=int, default=None, help='suppression half-window')
    params.add_argument('--coefficient', choices=[k.value for k in CoefficientKind], default=None)

    output = common.add_argument_group('Output')
    output.add_argument('--output', default=None, help='result path (stdout when omitted)')
    output.add_argument('--samples', type=int, default=None, help='uniform spline samples in the result')
    output.add_argument('--plot-data', dest='plot_data', default=None,
                        help='columnar text of original and spline positions')
    output.add_argument('--plot', default=None, help='PNG overlay (needs matplotlib)')

    parser = CliArgumentParser(prog='faststray', description='Open-loop trajectory simplification')
    sub = parser.add_subparsers(dest='command', parser_class=CliArgumentParser)
    sub.required = True

    sub.add_parser('simplify', parents=[common], help='simplify one trajectory and write the result document')

    sweep = sub.add_parser('sweep', parents=[common], help='evaluate several gamma values')
    sweep.add_argument('--sweep', required=True, help='gamma values, e.g. 1,2,3,4,5,6')
    sweep.add_argument('--baseline-epsilon', dest='baseline_epsilon', type=float, default=None,
                       help='add Ramer-Douglas-Peucker columns with this tolerance')
    sweep.add_argument('--workers', type=int, default=None, help='parallel sweep entries')

    bench = sub.add_parser('bench', parents=[common], help='time simplify at growing sizes')
    bench.add_argument('--bench-sizes', dest='bench_sizes', default=None, help='sizes, e.g. 10000,20000')
    bench.add_argument('--repeats', type=int, default=None, help='runs per size (median is reported)')
    return parser


def _pick(flag, fallback):
    return fallback if flag is None else flag


def parse_run_config(argv: Sequence[str], config: Config = None) -> RunConfig:
    """
    Parse argv and merge it over the config file

    Args:
        argv: arguments without the program name
        config: preloaded settings; read from --config when omitted

    Returns:
        RunConfig
    """
    args = build_parser().parse_args(list(argv))
    if config is None:
        config = Config(args.config)
    ok, message = config.validate()
    if not ok:
        raise ConfigError(f"invalid configuration: {message}")

    overrides = {
        name: value for name, value in
        (('alpha', args.alpha), ('beta', args.beta), ('gamma', args.gamma), ('coefficient', args.coefficient))
        if value is not None
    }
    params = dataclasses.replace(config.simplify_params(), **overrides)
    # bench times both coefficient kinds
    if (params.coefficient is CoefficientKind.CORRELATION or args.command == 'bench') \
            and params.beta + 1 < MIN_CORRELATION_WINDOW:
        raise ConfigError(
            f"beta={params.beta} leaves the endpoint correlation windows with fewer than "
            f"{MIN_CORRELATION_WINDOW} points; use beta >= {MIN_CORRELATION_WINDOW - 1} or --coefficient direction"
        )
    columns = ColumnSpec.parse(args.columns) if args.columns else ColumnSpec()

    sweep = None
    baseline_epsilon = None
    workers = config.SWEEP_WORKERS
    if args.command == 'sweep':
        sweep = parse_int_list(args.sweep, '--sweep')
        if not sweep:
            raise ConfigError("--sweep needs at least one gamma value")
        baseline_epsilon = args.baseline_epsilon
        workers = _pick(args.workers, workers)

    bench_sizes = list(config.BENCH_SIZES)
    bench_repeats = config.BENCH_REPEATS
    if args.command == 'bench':
        if args.bench_sizes is not None:
            bench_sizes = parse_int_list(args.bench_sizes, '--bench-sizes')
        bench_repeats = _pick(args.repeats, bench_repeats)

    return RunConfig(
        command=args.command,
        input_path=args.input,
        input_format=args.format,
        columns=columns,
        has_header=args.header,
        params=params,
        output_path=args.output,
        sweep=sweep,
        baseline_epsilon=baseline_epsilon,
        sample_count=_pick(args.samples, config.SAMPLE_COUNT),
        bench_sizes=bench_sizes,
        bench_repeats=bench_repeats,
        plot_data_path=args.plot_data,
        plot_path=args.plot,
        workers=workers,
        clamps=config.clamps(),
        pivot_tolerance=config.PIVOT_TOLERANCE,
        diameter_exact_limit=config.DIAMETER_EXACT_LIMIT,
        beta_given=args.beta is not None,
        log_level=config.LOG_LEVEL,
        log_file=config.LOG_FILE,
    )
