"""Exact-arithmetic primitives shared by the whole library.

Python ints are already arbitrary-precision and ``fractions.Fraction``
already stores every value reduced with a positive denominator, so these
are thin wrappers.  They exist to pin down the conventions the rest of
the library relies on (canonical decimal/"num/den" string forms, explicit
errors instead of silent nonsense) and to give tests a single surface to
check them against.
"""

from __future__ import annotations

import math
from fractions import Fraction

__all__ = [
    "binomial",
    "reduce_fraction",
    "modpow",
    "is_integer",
    "format_rational",
    "approx_decimal",
]


def binomial(n: int, j: int) -> int:
    """Binomial coefficient n!/(j!(n-j)!), exactly; 0 when j > n.

    >>> binomial(5, 2)
    10
    >>> binomial(2, 5)
    0
    """
    if n < 0 or j < 0:
        raise ValueError("binomial requires nonnegative arguments")
    return math.comb(n, j)


def reduce_fraction(num: int, den: int) -> Fraction:
    """Canonical reduced fraction: gcd(|num|, den) = 1, den > 0.

    The sign lives on the numerator.  A zero denominator raises
    ``ZeroDivisionError``.

    >>> reduce_fraction(2, -4)
    Fraction(-1, 2)
    """
    return Fraction(num, den)


def modpow(base: int, exp: int, m: int) -> int:
    """base**exp reduced into [0, m), via square-and-multiply."""
    if m < 1:
        raise ValueError(f"modulus must be >= 1, got {m}")
    if exp < 0:
        raise ValueError(f"exponent must be >= 0, got {exp}")
    return pow(base, exp, m)


def is_integer(q: Fraction) -> bool:
    """True iff the reduced denominator is 1."""
    return q.denominator == 1


def format_rational(q: Fraction) -> str:
    """Canonical string form: plain decimal for integers, "num/den" otherwise.

    >>> format_rational(Fraction(-1, 30))
    '-1/30'
    >>> format_rational(Fraction(0))
    '0'
    """
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def approx_decimal(q: Fraction, digits: int = 12) -> str:
    """Decimal approximation as a string; only ever *appended* to exact output."""
    return format(q.numerator / q.denominator, f".{digits}g")
