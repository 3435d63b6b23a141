"""Command-line surface"""
from .parser import RunConfig, build_parser, parse_run_config
from .commands import cmd_bench, cmd_simplify, cmd_sweep, load_trajectory, run

__all__ = [
    'RunConfig', 'build_parser', 'parse_run_config',
    'cmd_simplify', 'cmd_sweep', 'cmd_bench', 'load_trajectory', 'run',
]
