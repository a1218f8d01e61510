"""Exact exponent families attached to the counting function A_k(n).

Two families of upper-bound exponents are tabulated, both as exact
rationals: the baseline 1 - 2/(3**(k-2) + 1) and the refined
1 - 1/2**(k-2).  The refined bound is derived through per-position size
thresholds n**g_i with g_i = 2**(i-1)/2**(k-2) for positions 1..k-2; that
denominator is the unique geometric normalisation under which both
telescoping identities below hold exactly (see the tests, which also record
that the alternative n**(2**(i-1)/2**k) breaks them):

    1 + g_1 + ... + g_{j-1} - g_j = 1 - 1/2**(k-2)   for every j <= k-2
    g_1 + ... + g_{k-2}           = 1 - 1/2**(k-2)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "ExponentRow",
    "baseline_exponent",
    "exponent_table",
    "propagation_exponent",
    "refined_exponent",
    "threshold_exponent",
]


def baseline_exponent(k: int) -> Fraction:
    """Exponent 1 - 2/(3**(k-2) + 1) of the baseline upper bound on A_k."""
    if k < 2:
        raise ValueError("baseline exponent is defined for k >= 2")
    return 1 - Fraction(2, 3 ** (k - 2) + 1)


def refined_exponent(k: int) -> Fraction:
    """Exponent 1 - 1/2**(k-2) of the refined upper bound on A_k."""
    if k < 2:
        raise ValueError("refined exponent is defined for k >= 2")
    return 1 - Fraction(1, 2 ** (k - 2))


def threshold_exponent(i: int, k: int) -> Fraction:
    """Exponent 2**(i-1)/2**(k-2) of the i-th size threshold at depth k."""
    if k < 3:
        raise ValueError("thresholds require k >= 3")
    if not 1 <= i <= k - 2:
        raise ValueError(f"threshold index must satisfy 1 <= i <= {k - 2}")
    return Fraction(2 ** (i - 1), 2 ** (k - 2))


def propagation_exponent(ell: int) -> Fraction:
    """Exponent 1 - 1/2**ell obtained by extending representations by ell terms.

    If A_k(n) grew slower than every power of n for some k, the same
    machinery would bound A_(k+ell)(n) by n to this exponent; it coincides
    with refined_exponent(ell + 2).
    """
    if ell < 1:
        raise ValueError("ell must be at least 1")
    return 1 - Fraction(1, 2**ell)


@dataclass(frozen=True)
class ExponentRow:
    """All exponents attached to one term count k."""

    k: int
    baseline: Fraction
    refined: Fraction
    thresholds: tuple[Fraction, ...]


def exponent_table(k_max: int) -> list[ExponentRow]:
    """Rows for 2 <= k <= k_max; thresholds are empty for k = 2."""
    if k_max < 2:
        raise ValueError("k_max must be at least 2")
    rows = []
    for k in range(2, k_max + 1):
        thresholds = tuple(threshold_exponent(i, k) for i in range(1, k - 1))
        rows.append(ExponentRow(k, baseline_exponent(k), refined_exponent(k), thresholds))
    return rows
