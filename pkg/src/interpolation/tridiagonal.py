"""
Tridiagonal systems and the Thomas algorithm
"""
import logging
from dataclasses import dataclass

import numpy as np

from ..core.errors import DimensionMismatch, SingularSystem

logger = logging.getLogger(__name__)

PIVOT_TOLERANCE = 1e-14


@dataclass(frozen=True, eq=False)
class TridiagonalSystem:
    """
    A x = b with A stored as three diagonals.

    Attributes:
        sub: below the diagonal, length M - 1 (sub[i] sits in row i + 1)
        diag: main diagonal, length M
        sup: above the diagonal, length M - 1 (sup[i] sits in row i)
        rhs: right-hand side, shape (M,) or (M, K) for K independent columns
    """
    sub: np.ndarray
    diag: np.ndarray
    sup: np.ndarray
    rhs: np.ndarray

    def __post_init__(self):
        for name in ('sub', 'diag', 'sup', 'rhs'):
            object.__setattr__(self, name, np.asarray(getattr(self, name), dtype=np.float64))
        m = len(self.diag)
        if m < 1:
            raise DimensionMismatch("a tridiagonal system needs at least one row")
        if len(self.sub) != m - 1 or len(self.sup) != m - 1 or len(self.rhs) != m:
            raise DimensionMismatch(
                f"diagonal lengths {len(self.sub)}/{m}/{len(self.sup)} and rhs length "
                f"{len(self.rhs)} do not describe an {m}x{m} system"
            )

    @property
    def size(self) -> int:
        return len(self.diag)

    def is_diagonally_dominant(self) -> bool:
        off = np.zeros(self.size)
        off[1:] += np.abs(self.sub)
        off[:-1] += np.abs(self.sup)
        return bool(np.all(np.abs(self.diag) > off))

    def to_dense(self) -> np.ndarray:
        """Full M x M matrix, for inspection and checks"""
        matrix = np.diag(self.diag)
        if self.size > 1:
            matrix += np.diag(self.sub, -1) + np.diag(self.sup, 1)
        return matrix


def solve_tridiagonal(system: TridiagonalSystem, pivot_tolerance: float = PIVOT_TOLERANCE) -> np.ndarray:
    """
    Solve a tridiagonal system in O(M) by forward elimination and back substitution

    Args:
        system: the diagonals and right-hand side
        pivot_tolerance: smallest pivot magnitude accepted

    Returns:
        Solution with the same shape as system.rhs
    """
    m = system.size
    sub, sup = system.sub, system.sup
    pivots = system.diag.copy()
    rhs = system.rhs.copy()

    if abs(pivots[0]) < pivot_tolerance:
        raise SingularSystem(0, float(pivots[0]))
    for i in range(1, m):
        factor = sub[i - 1] / pivots[i - 1]
        pivots[i] -= factor * sup[i - 1]
        rhs[i] -= factor * rhs[i - 1]
        if abs(pivots[i]) < pivot_tolerance:
            raise SingularSystem(i, float(pivots[i]))

    x = np.empty_like(rhs)
    x[-1] = rhs[-1] / pivots[-1]
    for i in range(m - 2, -1, -1):
        x[i] = (rhs[i] - sup[i] * x[i + 1]) / pivots[i]
    return x
