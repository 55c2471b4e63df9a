"""Exact rational scalars and their "p/q" wire form.

All distances in this package are :class:`fractions.Fraction` values.
Floats are rejected everywhere: they cannot represent the exact
arithmetic the contracts promise.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InvalidParameterError

__all__ = ["parse_rational", "format_rational"]


def parse_rational(value: int | str | Fraction) -> Fraction:
    """Coerce an int, Fraction, or "p/q" / "p" string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise InvalidParameterError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        try:
            if "/" in text:
                num, den = text.split("/")
                d = int(den)
                if d <= 0:
                    raise InvalidParameterError(
                        f"denominator must be positive: {value!r}")
                return Fraction(int(num), d)
            return Fraction(int(text))
        except ValueError:
            raise InvalidParameterError(f"not a rational: {value!r}") from None
    raise InvalidParameterError(
        f"not a rational: {value!r} (floats are rejected, use 'p/q' strings)")


def format_rational(x: Fraction) -> str:
    """Canonical "p/q" form, denominator always written ("0/1", "3/1")."""
    return f"{x.numerator}/{x.denominator}"
