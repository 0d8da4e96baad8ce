"""Exact rational coefficients and their wire format.

Every coefficient in this package is a ``fractions.Fraction``.  Floats are
rejected at the boundary so no floating point can leak into a computation.
"""

from __future__ import annotations

import re
from fractions import Fraction

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")


def as_fraction(value: int | Fraction | str) -> Fraction:
    """Coerce an int, Fraction, or decimal-free string to a Fraction."""
    if isinstance(value, bool):
        raise TypeError("bool is not a rational coefficient")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def parse_rational(text: str) -> Fraction:
    """Parse "p" or "p/q"; anything with a decimal point or exponent is an error."""
    if not isinstance(text, str) or not _RATIONAL_RE.match(text):
        raise ValueError(f"not a decimal-free rational string: {text!r}")
    return Fraction(text)


def format_rational(value: Fraction) -> str:
    """Canonical string form: "p" when the denominator is 1, else "p/q"."""
    return str(value)
