"""Divided and finite differences over exact rationals.

The divided difference of order n at distinct knots x_0..x_n is

    sum_k f(x_k) / W'(x_k),    W(x) = (x - x_0) ... (x - x_n),

and the forward finite difference with step h is

    D_h^n f(x) = sum_{j=0..n} (-1)^(n-j) C(n, j) f(x + j h).

Note (-1)^(n-j) and (-1)^(n+j) agree for all integers, so either parity
convention yields the same operator.  At the equispaced knots k/n the two
notions are connected exactly:

    f[0, 1/n, ..., 1] = D_{1/n}^n f(0) / (n! (1/n)^n),

which check_equispaced_identity verifies as an exact comparison.  Order 0
is defined as f(x_0) for divided differences and f(x) for finite ones.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import DuplicateKnotError
from .funcs import FuncSpec
from .poly import Polynomial, Scalar, binomial


@dataclass(frozen=True)
class KnotValueList:
    """Distinct knots paired with function values."""

    pairs: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self) -> None:
        pairs = tuple((Fraction(x), Fraction(v)) for x, v in self.pairs)
        if not pairs:
            raise ValueError("need at least one knot")
        seen: set[Fraction] = set()
        for x, _ in pairs:
            if x in seen:
                raise DuplicateKnotError(x)
            seen.add(x)
        object.__setattr__(self, "pairs", pairs)

    @property
    def order(self) -> int:
        return len(self.pairs) - 1

    @property
    def knots(self) -> tuple[Fraction, ...]:
        return tuple(x for x, _ in self.pairs)

    @property
    def values(self) -> tuple[Fraction, ...]:
        return tuple(v for _, v in self.pairs)

    @classmethod
    def from_function(cls, f: FuncSpec, knots: Iterable[Scalar]) -> "KnotValueList":
        return cls(tuple((Fraction(x), f.evaluate(x)) for x in knots))

    @classmethod
    def equispaced(cls, f: FuncSpec, n: int) -> "KnotValueList":
        """Knots k/n for k = 0..n; n = 0 degenerates to the single knot 0."""
        if n < 0:
            raise ValueError("order must be nonnegative")
        if n == 0:
            return cls.from_function(f, (Fraction(0),))
        return cls.from_function(f, (Fraction(k, n) for k in range(n + 1)))


def divided_difference_direct(kv: KnotValueList) -> Fraction:
    """Sum of f(x_k) / W'(x_k) over the knots."""
    xs = kv.knots
    total = Fraction(0)
    for k, (xk, vk) in enumerate(kv.pairs):
        w = Fraction(1)
        for i, xi in enumerate(xs):
            if i != k:
                w *= xk - xi
        total += vk / w
    return total


def newton_coefficients(kv: KnotValueList) -> tuple[Fraction, ...]:
    """Entry k is the order-k divided difference at the first k+1 knots,
    computed by the recursive difference table."""
    xs = list(kv.knots)
    table = list(kv.values)
    n = kv.order
    coeffs = [table[0]]
    for depth in range(1, n + 1):
        for i in range(n, depth - 1, -1):
            table[i] = (table[i] - table[i - 1]) / (xs[i] - xs[i - depth])
        coeffs.append(table[depth])
    return tuple(coeffs)


def divided_difference_recursive(kv: KnotValueList) -> Fraction:
    """Top entry of the recursive difference table; oracle for the direct sum."""
    return newton_coefficients(kv)[-1]


@dataclass(frozen=True)
class FiniteDifferenceRequest:
    """Forward-difference evaluation request; h must be positive, n >= 0."""

    f: FuncSpec
    x: Fraction
    h: Fraction
    n: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "h", Fraction(self.h))
        if self.h <= 0:
            raise ValueError("step must be positive")
        if self.n < 0:
            raise ValueError("order must be nonnegative")


def finite_difference(req: FiniteDifferenceRequest) -> Fraction:
    n = req.n
    total = Fraction(0)
    for j in range(n + 1):
        sign = -1 if (n - j) % 2 else 1
        total += sign * binomial(n, j) * req.f.evaluate(req.x + j * req.h)
    return total


def finite_difference_via_integral(p: Polynomial, x: Scalar, h: Scalar, n: int) -> Fraction:
    """D_h^n p(x) computed as the n-fold sliding-window integral of p's
    n-th derivative; agrees exactly with the binomial sum."""
    if n < 1:
        raise ValueError("order must be at least 1")
    h = Fraction(h)
    if h <= 0:
        raise ValueError("step must be positive")
    q = p.derivative(n)
    for _ in range(n):
        q = q.window_integral(h)
    return q.evaluate(x)


@dataclass(frozen=True)
class EquispacedIdentityCheck:
    n: int
    lhs: Fraction
    rhs: Fraction
    equal: bool


def check_equispaced_identity(f: FuncSpec, n: int) -> EquispacedIdentityCheck:
    """Compare the order-n divided difference at the knots k/n against the
    scaled forward difference D_{1/n}^n f(0) / (n! (1/n)^n)."""
    if n < 1:
        raise ValueError("order must be at least 1")
    h = Fraction(1, n)
    kv = KnotValueList.equispaced(f, n)
    lhs = divided_difference_direct(kv)
    scale = math.factorial(n) * h**n
    rhs = finite_difference(FiniteDifferenceRequest(f, Fraction(0), h, n)) / scale
    return EquispacedIdentityCheck(n, lhs, rhs, lhs == rhs)
