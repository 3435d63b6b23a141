import os
from dotenv import load_dotenv
from typing import List, Optional, Tuple

from ..core.errors import ConfigError
from ..core.faststray import CoefficientClamps
from ..core.trajectory import CoefficientKind, SimplifyParams

LOG_LEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL')


def parse_int_list(text: str, name: str = 'list') -> List[int]:
    """Parse a comma-separated list of integers, e.g. '1,2,3'"""
    values = []
    for part in text.split(','):
        part = part.strip()
        if not part:
            continue
        try:
            values.append(int(part))
        except ValueError:
            raise ConfigError(f"{name} must hold comma-separated integers, got {text!r}")
    return values


class Config:
    def __init__(self, config_path: Optional[str] = 'config.env'):
        if config_path:
            load_dotenv(config_path, override=True)

        try:
            # Simplification defaults (CLI flags override these)
            self.ALPHA = int(os.getenv('ALPHA', '1'))
            self.BETA = int(os.getenv('BETA', '2'))
            self.GAMMA = int(os.getenv('GAMMA', '2'))
            self.COEFFICIENT = os.getenv('COEFFICIENT', 'correlation').strip().lower()

            # Numerical guards
            self.CORRELATION_CLAMP = float(os.getenv('CORRELATION_CLAMP', '1e-8'))
            self.VARIANCE_TOLERANCE = float(os.getenv('VARIANCE_TOLERANCE', '1e-12'))
            self.DIRECTION_CLAMP = float(os.getenv('DIRECTION_CLAMP', '1e-8'))
            self.PIVOT_TOLERANCE = float(os.getenv('PIVOT_TOLERANCE', '1e-14'))

            # Output and evaluation
            self.SAMPLE_COUNT = int(os.getenv('SAMPLE_COUNT', '0'))
            self.SWEEP_WORKERS = int(os.getenv('SWEEP_WORKERS', '1'))
            self.DIAMETER_EXACT_LIMIT = int(os.getenv('DIAMETER_EXACT_LIMIT', '20000'))

            # Benchmark
            self.BENCH_SIZES = parse_int_list(
                os.getenv('BENCH_SIZES', '10000,20000,40000,80000'), 'BENCH_SIZES'
            )
            self.BENCH_REPEATS = int(os.getenv('BENCH_REPEATS', '3'))
        except ValueError as e:
            raise ConfigError(f"invalid numeric setting in {config_path}: {e}") from e

        # Logging
        self.LOG_LEVEL = os.getenv('LOG_LEVEL', 'INFO').strip().upper()
        self.LOG_FILE = os.getenv('LOG_FILE', '').strip()

    def simplify_params(self) -> SimplifyParams:
        return SimplifyParams(
            alpha=self.ALPHA,
            beta=self.BETA,
            gamma=self.GAMMA,
            coefficient=CoefficientKind(self.COEFFICIENT),
        )

    def clamps(self) -> CoefficientClamps:
        return CoefficientClamps(
            variance_tolerance=self.VARIANCE_TOLERANCE,
            correlation_clamp=self.CORRELATION_CLAMP,
            direction_clamp=self.DIRECTION_CLAMP,
        )

    def validate(self) -> Tuple[bool, str]:
        """Validate configuration"""
        if self.ALPHA < 0:
            return False, f"ALPHA must be >= 0, got {self.ALPHA}"
        if self.BETA < 1:
            return False, f"BETA must be >= 1, got {self.BETA}"
        if self.GAMMA < 1:
            return False, f"GAMMA must be >= 1, got {self.GAMMA}"
        if self.COEFFICIENT not in [k.value for k in CoefficientKind]:
            return False, f"COEFFICIENT must be correlation or direction, got {self.COEFFICIENT!r}"
        for name in ('CORRELATION_CLAMP', 'VARIANCE_TOLERANCE', 'DIRECTION_CLAMP', 'PIVOT_TOLERANCE'):
            if not getattr(self, name) > 0:
                return False, f"{name} must be positive"
        if self.CORRELATION_CLAMP > 1:
            return False, "CORRELATION_CLAMP must not exceed 1"
        if self.SAMPLE_COUNT < 0:
            return False, f"SAMPLE_COUNT must be >= 0, got {self.SAMPLE_COUNT}"
        if self.SWEEP_WORKERS < 1:
            return False, f"SWEEP_WORKERS must be >= 1, got {self.SWEEP_WORKERS}"
        if self.DIAMETER_EXACT_LIMIT < 2:
            return False, "DIAMETER_EXACT_LIMIT must be >= 2"
        if not self.BENCH_SIZES:
            return False, "BENCH_SIZES is empty"
        if self.BENCH_REPEATS < 1:
            return False, "BENCH_REPEATS must be >= 1"
        if self.LOG_LEVEL not in LOG_LEVELS:
            return False, f"LOG_LEVEL must be one of {', '.join(LOG_LEVELS)}"
        return True, "OK"
