"""Shared helpers for randomized tests.

Everything here takes an explicit ``random.Random`` so individual tests
stay reproducible under a fixed seed.
"""

from fractions import Fraction

from divdiff import (
    GridFunction,
    PiecewiseLinearFunc,
    Polynomial,
    PolynomialFunc,
    RationalFunc,
)


def random_fraction(rng, max_num=9, max_den=9):
    return Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den))


def random_polynomial(rng, max_degree=6, max_num=9):
    degree = rng.randint(0, max_degree)
    return Polynomial(tuple(random_fraction(rng, max_num) for _ in range(degree + 1)))


def nonzero_polynomial(rng, max_degree=6):
    while True:
        p = random_polynomial(rng, max_degree)
        if not p.is_zero:
            return p


def random_grid_function(rng, max_denominator=8):
    denominator = rng.randint(1, max_denominator)
    entries = {
        k: random_fraction(rng)
        for k in range(denominator + 1)
        if rng.random() < 0.7
    }
    return GridFunction(denominator=denominator, entries=entries)


def pole_free_rational(rng, extend_zero=False):
    # q^2 + 1 is strictly positive on the whole line, so the quotient
    # can be evaluated anywhere.
    numerator = random_polynomial(rng, max_degree=4)
    q = random_polynomial(rng, max_degree=2, max_num=4)
    denominator = q * q + Polynomial((Fraction(1),))
    return RationalFunc(numerator, denominator, extended_by_zero=extend_zero)


def random_funcspec(rng, extend_zero=False):
    kind = rng.choice(("poly", "ratfun", "pl"))
    if kind == "poly":
        return PolynomialFunc(random_polynomial(rng), extended_by_zero=extend_zero)
    if kind == "ratfun":
        return pole_free_rational(rng, extend_zero=extend_zero)
    return PiecewiseLinearFunc(random_grid_function(rng), extended_by_zero=extend_zero)


def distinct_knots(rng, count, max_num=30, max_den=8):
    knots = set()
    while len(knots) < count:
        knots.add(random_fraction(rng, max_num=max_num, max_den=max_den))
    knots = list(knots)
    rng.shuffle(knots)
    return tuple(knots)
