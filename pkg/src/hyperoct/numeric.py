"""Exact integer and rational primitives shared by every other module.

All certified quantities are Python ints or ``fractions.Fraction`` values;
nothing in the certification path ever touches floating point.
"""

from __future__ import annotations

import math
from fractions import Fraction

Rational = Fraction


def binomial(n: int, k: int) -> int:
    """C(n, k) with the convention that out-of-range arguments give 0.

    The orbit-sum formulas rely on terms like C(n-3, k-3) vanishing
    silently when k < 3, so no argument validation happens here.
    """
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def double_factorial(m: int) -> int:
    """m!! for m >= -1, with (-1)!! = 1 (the empty product)."""
    if m < -1:
        raise ValueError(f"double factorial undefined for m={m}")
    result = 1
    while m > 1:
        result *= m
        m -= 2
    return result


def as_rational(value: int | str | Fraction) -> Fraction:
    """Coerce ints, Fractions, and 'p/q' strings to Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def format_rational(value: Fraction | int) -> str:
    """Canonical 'p/q' text form (plain 'p' when the denominator is 1)."""
    return str(Fraction(value))
