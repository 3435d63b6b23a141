"""
Exception hierarchy shared by every FastSTray module
"""
from typing import Optional


class TrajectoryError(ValueError):
    """Base class for all input, validation and numerical failures"""


class EmptyTrajectory(TrajectoryError):
    """Fewer than two samples"""


class NonMonotonicTime(TrajectoryError):
    """Timestamps are not strictly increasing"""

    def __init__(self, index: int, previous: float, current: float):
        self.index = index
        super().__init__(
            f"timestamp at index {index} ({current!r}) is not after the previous one ({previous!r})"
        )


class DimensionMismatch(TrajectoryError):
    """Points do not share one dimension in {2, 3}"""


class NonFiniteValue(TrajectoryError):
    """NaN or Inf in a coordinate or timestamp"""


class WindowTooSmall(TrajectoryError):
    """Correlation window holds fewer than three samples"""

    def __init__(self, index: int, size: int):
        self.index = index
        self.size = size
        super().__init__(
            f"correlation window around index {index} has {size} points, at least 3 are required"
        )


class SingularSystem(TrajectoryError):
    """A Thomas-algorithm pivot vanished"""

    def __init__(self, row: int, pivot: float):
        self.row = row
        self.pivot = pivot
        super().__init__(f"pivot {pivot!r} at row {row} is below tolerance")


class ParseError(TrajectoryError):
    """Malformed input record"""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(f"{prefix}{message}")


class OutOfRangeCoordinate(TrajectoryError):
    """Latitude or longitude outside its valid range"""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(f"{prefix}{message}")


class ConfigError(TrajectoryError):
    """Invalid configuration or command-line value"""


class ParameterRangeWarning(UserWarning):
    """A neighborhood size is outside the usual [1, 10] range"""
