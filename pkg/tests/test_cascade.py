"""Descending-order difference checks on polynomials."""

import math
import random
from fractions import Fraction

from divdiff import (
    NonzeroAtOrder,
    Polynomial,
    ZeroPolynomial,
    polynomial_cascade,
)

from util import nonzero_polynomial


def test_zero_polynomial_verdict():
    result = polynomial_cascade(Polynomial.zero())
    assert result.verdict == ZeroPolynomial()
    assert result.checks == ()


def test_cancellation_still_counts_as_zero():
    p = Polynomial((Fraction(0), Fraction(1))) - Polynomial((Fraction(0), Fraction(1)))
    assert polynomial_cascade(p).verdict == ZeroPolynomial()


def test_constant_polynomial():
    result = polynomial_cascade(Polynomial.constant(Fraction(-3, 7)))
    assert result.verdict == NonzeroAtOrder(0)
    assert len(result.checks) == 1
    check = result.checks[0]
    assert check.order == 0
    assert check.step is None
    assert check.value == Fraction(-3, 7)


def test_quadratic_with_zero_constant_term():
    # x(x-1) vanishes at 0 and 1 but its second difference does not
    p = Polynomial((Fraction(0), Fraction(-1), Fraction(1)))
    result = polynomial_cascade(p)
    assert result.verdict == NonzeroAtOrder(2)
    top = result.checks[0]
    assert top.order == 2
    assert top.step == Fraction(1, 2)
    assert top.value == Fraction(1, 2)
    assert top.nonzero


def test_checks_run_from_degree_down_to_constant():
    p = Polynomial((Fraction(1), Fraction(0), Fraction(0), Fraction(2)))
    result = polynomial_cascade(p)
    assert [c.order for c in result.checks] == [3, 2, 1, 0]
    assert [c.step for c in result.checks] == [
        Fraction(1, 3),
        Fraction(1, 2),
        Fraction(1),
        None,
    ]


def test_top_check_value_is_scaled_leading_coefficient():
    # the order-d difference of a degree-d polynomial with step 1/d is
    # leading * d! / d^d
    rng = random.Random(808)
    for _ in range(40):
        p = nonzero_polynomial(rng, max_degree=9)
        d = p.degree
        result = polynomial_cascade(p)
        if d == 0:
            assert result.checks[0].value == p.leading
            continue
        top = result.checks[0]
        assert top.order == d
        assert top.value == p.leading * math.factorial(d) * Fraction(1, d) ** d
        assert top.nonzero


def test_first_nonzero_order_is_the_degree():
    # a nonzero polynomial can never slip through every check
    rng = random.Random(809)
    for _ in range(200):
        p = nonzero_polynomial(rng, max_degree=10)
        verdict = polynomial_cascade(p).verdict
        assert isinstance(verdict, NonzeroAtOrder)
        assert verdict.order == p.degree
