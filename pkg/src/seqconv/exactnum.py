"""Exact integer/rational helpers and half-even decimal rendering.

Python ints are already arbitrary precision and :class:`fractions.Fraction`
keeps itself reduced with a positive denominator, so those two types carry
every exact value in the package. Decimal renderings are
:class:`decimal.Decimal` instances with a fixed exponent, which keeps trailing
zeros ("1.250") and allows exact decimal arithmetic afterwards.
"""

from __future__ import annotations

import decimal
from fractions import Fraction
from math import isqrt

__all__ = [
    "DEFAULT_DIGITS",
    "GUARD_DIGITS",
    "reduce",
    "to_decimal",
    "render",
    "golden_ratio",
    "sqrt5",
    "golden_ratio_cubed",
    "sqrt_decimal",
    "parse_decimal",
]

DEFAULT_DIGITS = 15
GUARD_DIGITS = 5


def reduce(num: int, den: int) -> Fraction:
    """Return ``num/den`` in lowest terms with a positive denominator.

    >>> reduce(-6, -4)
    Fraction(3, 2)
    """
    if den == 0:
        raise ZeroDivisionError(f"zero denominator in reduce({num}, {den})")
    return Fraction(int(num), int(den))


def _round_half_even(num: int, den: int) -> int:
    # den > 0
    q, r = divmod(num, den)
    twice = 2 * r
    if twice > den or (twice == den and q % 2 == 1):
        q += 1
    return q


def to_decimal(value: Fraction | int, digits: int = DEFAULT_DIGITS) -> decimal.Decimal:
    """Round ``value`` half-even to exactly ``digits`` fractional digits."""
    if digits < 1:
        raise ValueError(f"digits must be >= 1, got {digits}")
    value = Fraction(value)
    scaled = _round_half_even(value.numerator * 10**digits, value.denominator)
    sign = 1 if scaled < 0 else 0
    coeff = tuple(int(c) for c in str(abs(scaled)))
    return decimal.Decimal((sign, coeff, -digits))


def render(value: decimal.Decimal) -> str:
    """Plain positional string: '.' separator, leading '-' only, no exponent."""
    return format(value, "f")


def parse_decimal(text: str) -> Fraction:
    return Fraction(decimal.Decimal(text.strip().replace("−", "-")))


def _sqrt_scaled(n: int, digits: int) -> Fraction:
    # floor(sqrt(n) * 10**(digits+guard)) / 10**(digits+guard)
    work = digits + GUARD_DIGITS
    return Fraction(isqrt(n * 10 ** (2 * work)), 10**work)


def sqrt5(digits: int = DEFAULT_DIGITS) -> decimal.Decimal:
    return to_decimal(_sqrt_scaled(5, digits), digits)


def golden_ratio(digits: int = DEFAULT_DIGITS) -> decimal.Decimal:
    """(1 + sqrt 5)/2 to ``digits`` places via an integer square root.

    >>> render(golden_ratio(6))
    '1.618034'
    """
    if digits < 1:
        raise ValueError(f"digits must be >= 1, got {digits}")
    return to_decimal((1 + _sqrt_scaled(5, digits)) / 2, digits)


def golden_ratio_cubed(digits: int = DEFAULT_DIGITS) -> decimal.Decimal:
    """phi**3 obtained by exact cubing of a guarded golden_ratio rendering."""
    phi = Fraction(golden_ratio(digits + 2 * GUARD_DIGITS))
    return to_decimal(phi**3, digits)


def sqrt_decimal(value: Fraction, digits: int = DEFAULT_DIGITS) -> decimal.Decimal:
    """Square root of a nonnegative rational, rounded half-even to ``digits``."""
    value = Fraction(value)
    if value < 0:
        raise ValueError("square root of a negative value")
    work = digits + GUARD_DIGITS
    root = isqrt(value.numerator * 10 ** (2 * work) // value.denominator)
    return to_decimal(Fraction(root, 10**work), digits)
