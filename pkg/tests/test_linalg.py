"""Fraction-free elimination, kernel bases, and square solves.

The rank oracle below repeats elimination with plain Fraction pivoting,
a deliberately different code path from the integer-preserving scheme.
"""

import random
from fractions import Fraction

from divdiff.linalg import integer_echelon, kernel_basis, solve_square


def fraction_rank(matrix):
    rows = [[Fraction(x) for x in row] for row in matrix]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        lead = rows[rank][col]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                factor = rows[i][col] / lead
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def random_int_matrix(rng, nrows, ncols, density=0.6, span=5):
    return [
        [rng.randint(-span, span) if rng.random() < density else 0 for _ in range(ncols)]
        for _ in range(nrows)
    ]


def test_echelon_rank_matches_fraction_oracle():
    rng = random.Random(404)
    for _ in range(60):
        nrows = rng.randint(1, 6)
        ncols = rng.randint(1, 6)
        m = random_int_matrix(rng, nrows, ncols)
        echelon, pivots = integer_echelon(m)
        assert len(echelon) == len(pivots) == fraction_rank(m)
        # pivot columns strictly increase and each pivot entry is nonzero
        assert pivots == sorted(set(pivots))
        for row, c in zip(echelon, pivots):
            assert row[c] != 0
            assert all(v == 0 for v in row[:c])


def test_echelon_keeps_integer_entries():
    rng = random.Random(405)
    for _ in range(30):
        m = random_int_matrix(rng, 5, 5, density=0.9)
        echelon, _ = integer_echelon(m)
        for row in echelon:
            assert all(isinstance(v, int) for v in row)


def test_kernel_of_a_known_system():
    rows = [{0: 1, 1: 1}, {2: 1}]
    rank, pivots, basis = kernel_basis(rows, 3)
    assert rank == 2
    assert pivots == [0, 2]
    assert basis == [{0: Fraction(-1), 1: Fraction(1)}]


def test_kernel_of_empty_system_is_everything():
    rank, pivots, basis = kernel_basis([], 3)
    assert rank == 0
    assert pivots == []
    assert basis == [{0: Fraction(1)}, {1: Fraction(1)}, {2: Fraction(1)}]


def test_untouched_columns_become_singleton_vectors():
    rows = [{1: 2, 3: -1}]
    rank, _, basis = kernel_basis(rows, 5)
    assert rank == 1
    assert {0: Fraction(1)} in basis
    assert {2: Fraction(1)} in basis
    assert {4: Fraction(1)} in basis


def apply_row(row, vec):
    return sum(Fraction(coeff) * vec.get(col, Fraction(0)) for col, coeff in row.items())


def test_kernel_vectors_annihilate_rows_and_are_independent():
    rng = random.Random(406)
    for _ in range(40):
        ncols = rng.randint(1, 8)
        nrows = rng.randint(1, 5)
        rows = []
        for _ in range(nrows):
            row = {
                c: rng.randint(-4, 4)
                for c in range(ncols)
                if rng.random() < 0.5
            }
            rows.append({c: v for c, v in row.items() if v})
        rank, pivots, basis = kernel_basis(rows, ncols)
        assert rank + len(basis) == ncols
        free = [c for c in range(ncols) if c not in set(pivots)]
        for vec, f in zip(basis, free):
            assert vec.get(f) == 1
            # holding a 1 where every other basis vector holds 0 makes the
            # family independent by inspection
            for other, g in zip(basis, free):
                if g != f:
                    assert vec.get(g, Fraction(0)) == 0
            for row in rows:
                assert apply_row(row, vec) == 0


def test_kernel_accepts_fraction_coefficients():
    rows = [{0: Fraction(1, 2), 1: Fraction(1, 3)}]
    rank, pivots, basis = kernel_basis(rows, 2)
    assert rank == 1
    assert len(basis) == 1
    assert apply_row(rows[0], basis[0]) == 0


def test_solve_square_round_trip():
    rng = random.Random(407)
    solved = 0
    for _ in range(60):
        n = rng.randint(1, 5)
        a = [[Fraction(rng.randint(-5, 5)) for _ in range(n)] for _ in range(n)]
        x_true = [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(n)]
        b = [sum(a[i][j] * x_true[j] for j in range(n)) for i in range(n)]
        x = solve_square(a, b)
        if x is None:
            assert fraction_rank(a) < n
            continue
        solved += 1
        assert x == x_true or [
            sum(a[i][j] * x[j] for j in range(n)) for i in range(n)
        ] == b
    assert solved > 30


def test_solve_square_detects_singular():
    a = [[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]]
    assert solve_square(a, [Fraction(1), Fraction(2)]) is None
