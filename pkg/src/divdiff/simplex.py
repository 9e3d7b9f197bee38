"""Exact linear programming over the rationals.

Solves   minimize c.x   subject to   A_ub x <= b_ub,  A_eq x = b_eq,  x >= 0

by the two-phase tableau simplex method with Bland's anti-cycling rule.
Every tableau entry is a Fraction, so feasibility, optimality and the
reported optimum are exact statements, never floating-point verdicts.
Intended for the small, dense instances this package produces.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LpResult:
    status: str
    value: Optional[Fraction]
    x: Optional[tuple[Fraction, ...]]


def _pivot(rows: list[list[Fraction]], cost: list[Fraction], basis: list[int], r: int, c: int) -> None:
    pivot = rows[r][c]
    rows[r] = [v / pivot for v in rows[r]]
    prow = rows[r]
    for i, row in enumerate(rows):
        if i != r and row[c] != 0:
            f = row[c]
            rows[i] = [a - f * b for a, b in zip(row, prow)]
    if cost[c] != 0:
        f = cost[c]
        cost[:] = [a - f * b for a, b in zip(cost, prow)]
    basis[r] = c


def _price_out(cost: list[Fraction], rows: list[list[Fraction]], basis: list[int]) -> None:
    for i, b in enumerate(basis):
        if cost[b] != 0:
            f = cost[b]
            cost[:] = [a - f * v for a, v in zip(cost, rows[i])]


def _iterate(
    rows: list[list[Fraction]],
    cost: list[Fraction],
    basis: list[int],
    banned: frozenset[int],
) -> str:
    width = len(cost) - 1
    while True:
        entering = next(
            (j for j in range(width) if j not in banned and cost[j] < 0), None
        )
        if entering is None:
            return OPTIMAL
        leaving = None
        best = None
        for i, row in enumerate(rows):
            coeff = row[entering]
            if coeff > 0:
                ratio = row[-1] / coeff
                # Bland: break ratio ties on the smallest basic variable index.
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leaving]):
                    best = ratio
                    leaving = i
        if leaving is None:
            return UNBOUNDED
        _pivot(rows, cost, basis, leaving, entering)


def solve_lp(
    c: Sequence[Fraction],
    a_ub: Sequence[Sequence[Fraction]] = (),
    b_ub: Sequence[Fraction] = (),
    a_eq: Sequence[Sequence[Fraction]] = (),
    b_eq: Sequence[Fraction] = (),
) -> LpResult:
    """Minimize c.x over x >= 0 with the given inequality and equality rows."""
    n = len(c)
    m_ub = len(a_ub)
    n_art = len(a_eq) + sum(1 for b in b_ub if Fraction(b) < 0)
    art_start = n + m_ub
    total = art_start + n_art

    rows: list[list[Fraction]] = []
    basis: list[int] = []
    art = art_start
    for i in range(m_ub):
        b = Fraction(b_ub[i])
        coeffs = [Fraction(v) for v in a_ub[i]]
        negate = b < 0
        if negate:
            b = -b
            coeffs = [-v for v in coeffs]
        row = coeffs + [Fraction(0)] * (m_ub + n_art) + [b]
        row[n + i] = Fraction(-1) if negate else Fraction(1)
        if negate:
            row[art] = Fraction(1)
            basis.append(art)
            art += 1
        else:
            basis.append(n + i)
        rows.append(row)
    for i in range(len(a_eq)):
        b = Fraction(b_eq[i])
        coeffs = [Fraction(v) for v in a_eq[i]]
        if b < 0:
            b = -b
            coeffs = [-v for v in coeffs]
        row = coeffs + [Fraction(0)] * (m_ub + n_art) + [b]
        row[art] = Fraction(1)
        basis.append(art)
        art += 1
        rows.append(row)

    if n_art:
        cost1 = [Fraction(0)] * art_start + [Fraction(1)] * n_art + [Fraction(0)]
        _price_out(cost1, rows, basis)
        status = _iterate(rows, cost1, basis, frozenset())
        if status != OPTIMAL or -cost1[-1] > 0:
            return LpResult(INFEASIBLE, None, None)
        # Pivot leftover artificials out of the basis; rows that cannot be
        # pivoted are redundant and get dropped.
        keep: list[int] = []
        for i in range(len(rows)):
            if basis[i] >= art_start:
                col = next((j for j in range(art_start) if rows[i][j] != 0), None)
                if col is None:
                    continue
                _pivot(rows, cost1, basis, i, col)
            keep.append(i)
        rows = [rows[i] for i in keep]
        basis = [basis[i] for i in keep]

    banned = frozenset(range(art_start, total))
    cost2 = [Fraction(v) for v in c] + [Fraction(0)] * (m_ub + n_art) + [Fraction(0)]
    _price_out(cost2, rows, basis)
    status = _iterate(rows, cost2, basis, banned)
    if status == UNBOUNDED:
        return LpResult(UNBOUNDED, None, None)

    x = [Fraction(0)] * n
    for i, b in enumerate(basis):
        if b < n:
            x[b] = rows[i][-1]
    value = sum(ci * xi for ci, xi in zip(c, x))
    return LpResult(OPTIMAL, value, tuple(x))
