"""Parsing and formatting of exact rational scalars.

The scalar type everywhere in this package is fractions.Fraction, which
already keeps values in lowest terms with a positive denominator and
raises on division by zero.  Text form is "p/q" or a bare integer and
nothing else; decimal strings are display-only output, never input.
"""

import re
from decimal import Decimal, localcontext
from fractions import Fraction

from .errors import ParseError

Rational = Fraction

DECIMAL_DIGITS = 15

_RATIONAL_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or an integer literal; anything else is a ParseError."""
    m = _RATIONAL_RE.match(text.strip())
    if m is None:
        raise ParseError(f"not a rational literal: {text!r}")
    numerator = int(m.group(1))
    denominator = int(m.group(2)) if m.group(2) is not None else 1
    if denominator == 0:
        raise ParseError(f"zero denominator in rational literal: {text!r}")
    return Fraction(numerator, denominator)


def format_rational(value: Fraction) -> str:
    """Canonical text form: bare integer when the denominator is 1."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def decimal_string(value: Fraction, digits: int = DECIMAL_DIGITS) -> str:
    """Display-only decimal rendering with the given significant digits."""
    with localcontext() as ctx:
        ctx.prec = digits
        return str(Decimal(value.numerator) / Decimal(value.denominator))
