"""
Generic delimited-text trajectories: one sample per row, configurable columns
"""
import csv
import io
import logging
from dataclasses import dataclass
from typing import Optional, TextIO, Union

from ..core.errors import ConfigError, ParseError
from ..core.trajectory import Trajectory, validate_trajectory

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ColumnSpec:
    """Zero-based column index of time and each coordinate; z absent means 2D"""
    t: int = 0
    x: int = 1
    y: int = 2
    z: Optional[int] = None

    def __post_init__(self):
        used = self.indices()
        if any(i < 0 for i in used):
            raise ConfigError(f"column indices must be non-negative, got {used}")
        if len(set(used)) != len(used):
            raise ConfigError(f"column indices must be distinct, got {used}")

    def indices(self):
        cols = [self.t, self.x, self.y]
        if self.z is not None:
            cols.append(self.z)
        return cols

    @property
    def dimension(self) -> int:
        return 2 if self.z is None else 3

    @classmethod
    def parse(cls, text: str) -> 'ColumnSpec':
        """Parse 't:x:y' or 't:x:y:z', e.g. '0:1:2:3'"""
        parts = [p.strip() for p in text.split(':')]
        if len(parts) not in (3, 4):
            raise ConfigError(f"column spec must look like t:x:y[:z], got {text!r}")
        try:
            values = [int(p) for p in parts]
        except ValueError:
            raise ConfigError(f"column spec must contain integers, got {text!r}")
        return cls(*values)


def parse_csv(text: Union[str, TextIO], column_spec: ColumnSpec = None,
              has_header: bool = False) -> Trajectory:
    """
    Parse comma-separated samples into a Trajectory

    Args:
        text: CSV content or an open text stream
        column_spec: where time and coordinates live
        has_header: skip the first row

    Returns:
        Validated Trajectory with time rebased to 0
    """
    spec = column_spec or ColumnSpec()
    stream = io.StringIO(text) if isinstance(text, str) else text
    reader = csv.reader(stream)

    points, times = [], []
    header_pending = has_header
    for row in reader:
        if header_pending:
            header_pending = False
            continue
        if not row or all(not field.strip() for field in row):
            continue
        line = reader.line_num
        needed = max(spec.indices())
        if len(row) <= needed:
            raise ParseError(f"expected at least {needed + 1} columns, found {len(row)}", line)
        try:
            times.append(float(row[spec.t]))
            coords = [float(row[spec.x]), float(row[spec.y])]
            if spec.z is not None:
                coords.append(float(row[spec.z]))
        except ValueError as e:
            raise ParseError(f"invalid number ({e})", line) from e
        points.append(coords)

    logger.debug(f"Parsed {len(points)} CSV samples ({spec.dimension}D)")
    return validate_trajectory(points, times)


def format_csv(trajectory: Trajectory, header: bool = False) -> str:
    """Serialize a Trajectory as t,x,y[,z] rows with round-trip precision"""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator='\n')
    if header:
        writer.writerow(['t', 'x', 'y', 'z'][:trajectory.dimension + 1])
    for t, p in zip(trajectory.timestamps, trajectory.points):
        writer.writerow([repr(float(t))] + [repr(float(c)) for c in p])
    return out.getvalue()
