"""Exact linear algebra helpers: fraction-free echelon form and kernels.

Rows are sparse mappings from column index to coefficient.  Elimination
runs on the submatrix of columns actually touched by some row; columns no
row touches are free with trivial singleton kernel vectors, which keeps
kernels of very wide systems cheap.  The echelon step is the one-step
fraction-free (integer-preserving) scheme: every division is exact, so no
rational blowup occurs during pivoting.
"""

import math
from fractions import Fraction
from typing import Mapping, Sequence


def _exact_div(a: int, b: int) -> int:
    q, r = divmod(a, b)
    if r:
        raise ArithmeticError("inexact division in fraction-free elimination")
    return q


def integer_echelon(matrix: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    """Row echelon form of an integer matrix by fraction-free elimination.

    Returns the nonzero echelon rows and their pivot column indices.
    """
    rows = [list(r) for r in matrix]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivot_cols: list[int] = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pr = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        pivot = rows[r][c]
        for i in range(r + 1, nrows):
            factor = rows[i][c]
            rows[i] = [
                _exact_div(pivot * rows[i][j] - factor * rows[r][j], prev)
                for j in range(ncols)
            ]
        prev = pivot
        pivot_cols.append(c)
        r += 1
    return rows[:r], pivot_cols


def kernel_basis(
    rows: Sequence[Mapping[int, int | Fraction]], ncols: int
) -> tuple[int, list[int], list[dict[int, Fraction]]]:
    """Null-space basis of a sparse row system over the rationals.

    Returns (rank, pivot columns, basis).  Each basis vector is a sparse
    mapping normalised so its free column holds 1; vectors are ordered by
    free column.  Untouched columns always contribute singleton vectors.
    """
    touched = sorted({c for row in rows for c in row})
    col_of = {c: i for i, c in enumerate(touched)}

    int_rows: list[list[int]] = []
    for row in rows:
        if not row:
            continue
        scale = math.lcm(*(Fraction(v).denominator for v in row.values()))
        dense = [0] * len(touched)
        for c, v in row.items():
            scaled = Fraction(v) * scale
            dense[col_of[c]] = scaled.numerator
        int_rows.append(dense)

    echelon, pivot_local = integer_echelon(int_rows) if int_rows else ([], [])
    rank = len(pivot_local)
    pivot_cols = [touched[c] for c in pivot_local]
    pivot_set = set(pivot_local)

    free_cols: list[int] = []
    for c in range(ncols):
        if c not in col_of or col_of[c] not in pivot_set:
            free_cols.append(c)

    basis: list[dict[int, Fraction]] = []
    for f in free_cols:
        vec_local: dict[int, Fraction] = {}
        if f in col_of:
            vec_local[col_of[f]] = Fraction(1)
            for row, pc in zip(reversed(echelon), reversed(pivot_local)):
                s = Fraction(0)
                for j in range(pc + 1, len(touched)):
                    if row[j] and j in vec_local:
                        s += row[j] * vec_local[j]
                if s:
                    vec_local[pc] = -s / row[pc]
        vec = {touched[j]: v for j, v in vec_local.items() if v != 0}
        if f not in col_of:
            vec = {f: Fraction(1)}
        basis.append(vec)
    return rank, pivot_cols, basis


def solve_square(matrix: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]):
    """Solve a square rational system by Gaussian elimination.

    Returns the solution vector, or None when the matrix is singular.
    """
    n = len(matrix)
    m = [[Fraction(x) for x in row] + [Fraction(rhs[i])] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return None
        m[col], m[pivot] = m[pivot], m[col]
        inv = m[col][col]
        for r in range(col + 1, n):
            if m[r][col] != 0:
                factor = m[r][col] / inv
                m[r] = [a - factor * b for a, b in zip(m[r], m[col])]
    x = [Fraction(0)] * n
    for r in range(n - 1, -1, -1):
        s = m[r][n] - sum(m[r][c] * x[c] for c in range(r + 1, n))
        x[r] = s / m[r][r]
    return x
