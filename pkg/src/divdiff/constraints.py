"""Grid functions annihilated by every low-order forward difference.

Fix N >= 1 and let L = lcm(1, ..., N).  A function on the grid
{0, 1/L, ..., 1} is constrained by requiring

    f(0) = 0   and   D_{1/n}^n f(0) = 0   for every n = 1, ..., N,

where D is the forward difference operator.  Each condition is an
integer linear equation in the grid values f(k/L): the order-n row has
entry (-1)**(n-j) * C(n, j) in the column k = j*L/n for j = 0..n.  The
null space of the resulting (N+1) x (L+1) system describes exactly the
grid functions invisible to all these differences at once.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .funcs import GridFunction
from .linalg import kernel_basis
from .poly import binomial


@dataclass(frozen=True)
class ConstraintSystem:
    N: int
    L: int
    rows: tuple[dict[int, int], ...]

    @property
    def ncols(self) -> int:
        return self.L + 1

    def residuals(self, g: GridFunction) -> tuple[Fraction, ...]:
        """Evaluate every constraint row at g (all zero iff g is a solution)."""
        if g.denominator != self.L:
            raise ValueError(
                f"grid denominator {g.denominator} does not match L={self.L}"
            )
        return tuple(
            sum((coeff * g.value(col) for col, coeff in row.items()), Fraction(0))
            for row in self.rows
        )


def build_constraint_system(N: int) -> ConstraintSystem:
    if N < 1:
        raise ValueError("N must be at least 1")
    L = math.lcm(*range(1, N + 1))
    rows: list[dict[int, int]] = [{0: 1}]
    for n in range(1, N + 1):
        stride = L // n
        row = {
            j * stride: (-1) ** (n - j) * binomial(n, j) for j in range(n + 1)
        }
        rows.append(row)
    return ConstraintSystem(N=N, L=L, rows=tuple(rows))


@dataclass(frozen=True)
class NullspaceReport:
    N: int
    L: int
    rank: int
    dimension: int
    basis: tuple[GridFunction, ...]
    forced_zero_points: tuple[int, ...]


def nullspace(system: ConstraintSystem) -> NullspaceReport:
    """Compute a basis of the solution set and the columns it never touches.

    A grid index k is reported as forced to zero when every solution
    vanishes there, i.e. no basis vector has a nonzero entry in column k.
    """
    rank, _, vectors = kernel_basis(system.rows, system.ncols)
    basis = tuple(
        GridFunction(denominator=system.L, entries=vec) for vec in vectors
    )
    covered = set()
    for vec in vectors:
        covered.update(k for k, v in vec.items() if v != 0)
    forced = tuple(k for k in range(system.ncols) if k not in covered)
    return NullspaceReport(
        N=system.N,
        L=system.L,
        rank=rank,
        dimension=len(basis),
        basis=basis,
        forced_zero_points=forced,
    )
