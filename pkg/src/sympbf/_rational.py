from __future__ import annotations

from fractions import Fraction
from numbers import Rational


def as_fraction(x) -> Fraction:
    """Coerce int, Fraction, "p/q" string or float (exactly) to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(x, (int, Rational, float, str)):
        return Fraction(x)
    # numpy scalars
    if hasattr(x, "item"):
        return Fraction(x.item())
    raise TypeError(f"cannot interpret {x!r} as a rational number")


def fraction_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"
