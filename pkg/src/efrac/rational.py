"""Exact rational helpers: checked subtraction and integer power comparison.

Everything here runs on arbitrary-precision integers.  Values are
`fractions.Fraction`, which keeps numerator and denominator coprime with a
positive denominator, so canonical form never has to be re-established by
callers.
"""

from __future__ import annotations

import enum
from fractions import Fraction

__all__ = ["Fraction", "Ordering", "frac_sub", "pow_compare"]


class Ordering(enum.Enum):
    """Three-way comparison outcome."""

    LESS = -1
    EQUAL = 0
    GREATER = 1


def frac_sub(x: Fraction, y: Fraction) -> Fraction:
    """Return x - y, requiring x >= y.

    Remainders in the denominator search must stay nonnegative; a negative
    difference means an upstream bound admitted a reciprocal larger than the
    remaining target, so it is rejected loudly instead of propagating.
    """
    if y > x:
        raise ValueError(f"negative remainder: {x} - {y}")
    return x - y


def pow_compare(m: int, p: int, n: int, q: int) -> Ordering:
    """Compare m**p against n**q using exact integers only.

    This is how threshold tests of the form ``m >= n**(u/v)`` are decided:
    raise both sides to integer powers and compare, never touching floating
    point.  A bit-length filter settles lopsided cases without materialising
    either power; the filter is only sound for positive exponents since
    b**e < 2**(bit_length(b)*e) needs e >= 1 to be strict.
    """
    if m < 1 or n < 1:
        raise ValueError("bases must be positive integers")
    if p < 0 or q < 0:
        raise ValueError("exponents must be nonnegative integers")
    if p >= 1 and q >= 1:
        if m.bit_length() * p <= (n.bit_length() - 1) * q:
            return Ordering.LESS
        if n.bit_length() * q <= (m.bit_length() - 1) * p:
            return Ordering.GREATER
    left, right = m**p, n**q
    if left < right:
        return Ordering.LESS
    if left > right:
        return Ordering.GREATER
    return Ordering.EQUAL
