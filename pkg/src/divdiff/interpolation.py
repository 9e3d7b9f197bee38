"""Equispaced polynomial interpolation and the degree-reduction test.

The interpolant of order n matches a function at the knots 0, 1/n, ..., 1
and is built in Newton form, so its x^n coefficient is exactly the order-n
divided difference at those knots.  The interpolant drops to degree n-1 or
lower precisely when that divided difference vanishes.
"""

from dataclasses import dataclass
from fractions import Fraction

from .differences import KnotValueList, newton_coefficients
from .funcs import FuncSpec
from .poly import Polynomial


@dataclass(frozen=True)
class EquispacedSample:
    """Values of a function at the knots k/n; n = 0 means the single knot 0."""

    n: int
    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("order must be nonnegative")
        values = tuple(Fraction(v) for v in self.values)
        if len(values) != self.n + 1:
            raise ValueError(f"expected {self.n + 1} values, got {len(values)}")
        object.__setattr__(self, "values", values)

    @property
    def knots(self) -> tuple[Fraction, ...]:
        if self.n == 0:
            return (Fraction(0),)
        return tuple(Fraction(k, self.n) for k in range(self.n + 1))

    @classmethod
    def from_function(cls, f: FuncSpec, n: int) -> "EquispacedSample":
        if n == 0:
            return cls(0, (f.evaluate(Fraction(0)),))
        return cls(n, tuple(f.evaluate(Fraction(k, n)) for k in range(n + 1)))


def lagrange_equispaced(sample: EquispacedSample) -> Polynomial:
    """Interpolating polynomial through the sample, assembled in Newton form."""
    knots = sample.knots
    kv = KnotValueList(tuple(zip(knots, sample.values)))
    coeffs = newton_coefficients(kv)
    result = Polynomial.zero()
    basis = Polynomial.constant(1)
    for k, c in enumerate(coeffs):
        result = result + basis * c
        basis = basis * Polynomial((-knots[k], Fraction(1)))
    return result


def leading_coefficient(q: Polynomial, n: int) -> Fraction:
    """Coefficient of x^n in q, treating q as a polynomial of formal order n.

    Returns 0 when deg(q) < n; a q of genuinely larger degree is an error.
    """
    if q.degree > n:
        raise ValueError(f"degree {q.degree} exceeds formal order {n}")
    return q.coefficient(n)


def degree_reduced(sample: EquispacedSample) -> bool:
    """True when the order-n interpolant has degree strictly below n."""
    if sample.n < 1:
        raise ValueError("order must be at least 1")
    return leading_coefficient(lagrange_equispaced(sample), sample.n) == 0
