"""Size-type classification of representations and the two-term reduction.

For k >= 3, a representation (m_1, ..., m_k) of a/n is assigned a type
j in {1, ..., k-1}: the smallest j <= k-2 whose denominator reaches its
size threshold, m_j >= n**g_j with g_j = threshold_exponent(j, k), or k-1
when the first k-2 denominators all stay below threshold.  Every tuple gets
exactly one type, and ties at the threshold count as reaching it.

All threshold tests are exact: m >= n**(u/v) is decided as m**v >= n**u in
integers via pow_compare.  The integer threshold itself (the smallest m
passing the test) is computed with iterated integer square roots, which is
possible because every g_j reduces to 1/2**s.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt
from typing import Iterable, Sequence

from .exponents import threshold_exponent
from .rational import Ordering, pow_compare
from .search import BudgetExhausted, Representation, SearchBudget, _caps, _search

__all__ = [
    "TypeSurvey",
    "binary_reduce",
    "classify",
    "has_type",
    "thresholds",
    "type_counts",
    "type_membership",
    "type_witnesses",
]


def classify(rep: Representation | Sequence[int], n: int) -> int:
    """Type of a representation of a/n: the first position at threshold.

    Returns the smallest j <= k-2 with m_j >= n**g_j, or k-1 when no such
    position exists.  Only defined for k >= 3 terms.
    """
    ms = rep.denominators if isinstance(rep, Representation) else tuple(rep)
    k = len(ms)
    if k < 3:
        raise ValueError("classification requires at least 3 terms")
    if n < 1:
        raise ValueError("n must be positive")
    for j in range(1, k - 1):
        g = threshold_exponent(j, k)
        if pow_compare(ms[j - 1], g.denominator, n, g.numerator) is not Ordering.LESS:
            return j
    return k - 1


def thresholds(n: int, k: int) -> tuple[int, ...]:
    """Integer thresholds T_1..T_(k-2): T_i is the least m with m >= n**g_i.

    Each g_i reduces to 1/2**s, so T_i comes from s integer square roots;
    m < n**g_i is then equivalent to m < T_i, and m >= n**g_i to m >= T_i.
    """
    if k < 3:
        raise ValueError("thresholds require k >= 3")
    if n < 1:
        raise ValueError("n must be positive")
    out = []
    for i in range(1, k - 1):
        s = k - 1 - i  # g_i = 1/2**s in lowest terms
        root = n
        for _ in range(s):
            root = isqrt(root)
        out.append(root if root ** (1 << s) == n else root + 1)
    return tuple(out)


@dataclass
class TypeSurvey:
    """Per-type membership of numerators a in 1..n at term count k.

    members[j] is the set of a whose target a/n admits at least one type-j
    representation.  ``complete`` is False if any membership search ran out
    of budget; such memberships are reported as absent but never silently
    trusted.
    """

    n: int
    k: int
    members: dict[int, set[int]]
    nodes: int
    complete: bool

    @property
    def counts(self) -> dict[int, int]:
        return {j: len(s) for j, s in self.members.items()}

    def union(self) -> set[int]:
        out: set[int] = set()
        for s in self.members.values():
            out |= s
        return out


def _typed_constraints(
    ts: tuple[int, ...], k: int, j: int
) -> tuple[tuple[int | None, ...] | None, tuple[int | None, ...]]:
    # Levels 0..k-3 (0-based) carry the constraints; arrays are indexed by
    # level and padded with None beyond k-2 (those levels are never consulted).
    ceilings: list[int | None] = [None] * k
    floors: list[int | None] = [None] * k
    for i in range(j - 1):
        ceilings[i] = ts[i]  # m_(i+1) < T_(i+1)
    if j <= k - 2:
        floors[j - 1] = ts[j - 1]  # m_j >= T_j
        return tuple(floors), tuple(ceilings)
    # type k-1: every early position below threshold, no floor
    for i in range(k - 2):
        ceilings[i] = ts[i]
    return None, tuple(ceilings)


def has_type(
    a: int, n: int, k: int, j: int, budget: SearchBudget | None = None
) -> bool | None:
    """Whether a/n has a type-j representation; None when undecided.

    The search space is restricted up front: positions before j are capped
    below their thresholds and position j starts at its threshold, so a
    witness is found (or ruled out) without enumerating unrelated types.
    """
    if k < 3:
        raise ValueError("types require k >= 3")
    if not 1 <= j <= k - 1:
        raise ValueError(f"type must satisfy 1 <= j <= {k - 1}")
    if a < 1 or n < 1:
        raise ValueError("target a/n requires a >= 1 and n >= 1")
    ts = thresholds(n, k)
    floors, ceilings = _typed_constraints(ts, k, j)
    g = gcd(a, n)
    max_nodes, _ = _caps(budget)
    _, found, _, complete = _search(
        a // g, n // g, k, max_nodes, 1, floors, ceilings, collect=False
    )
    if found:
        return True
    return False if complete else None


def type_witnesses(
    a: int, n: int, k: int, budget: SearchBudget | None = None
) -> dict[int, tuple[int, ...]]:
    """One witness representation of a/n per type that admits one."""
    if k < 3:
        raise ValueError("types require k >= 3")
    ts = thresholds(n, k)
    g = gcd(a, n)
    max_nodes, _ = _caps(budget)
    out: dict[int, tuple[int, ...]] = {}
    for j in range(1, k):
        floors, ceilings = _typed_constraints(ts, k, j)
        sols, found, _, _ = _search(
            a // g, n // g, k, max_nodes, 1, floors, ceilings
        )
        if found:
            out[j] = sols[0]
    return out


def type_membership(
    n: int, k: int, budget: SearchBudget | None = None
) -> TypeSurvey:
    """Survey per-type membership over all numerators 1 <= a <= n.

    Each (a, j) pair gets its own budget-capped witness search; the node
    total is accumulated across all of them.
    """
    if k < 3:
        raise ValueError("types require k >= 3")
    if n < 1:
        raise ValueError("n must be positive")
    ts = thresholds(n, k)
    constraints = [_typed_constraints(ts, k, j) for j in range(1, k)]
    max_nodes, _ = _caps(budget)
    members: dict[int, set[int]] = {j: set() for j in range(1, k)}
    nodes = 0
    complete = True
    for a in range(1, n + 1):
        g = gcd(a, n)
        p, q = a // g, n // g
        for j, (floors, ceilings) in enumerate(constraints, start=1):
            _, found, used, done = _search(
                p, q, k, max_nodes, 1, floors, ceilings, collect=False
            )
            nodes += used
            if found:
                members[j].add(a)
            elif not done:
                complete = False
    return TypeSurvey(n, k, members, nodes, complete)


def type_counts(
    n: int, k: int, budget: SearchBudget | None = None
) -> dict[int, int]:
    """Number of numerators with at least one type-j representation, per j.

    Raises BudgetExhausted when any membership could not be decided, since
    a plain count cannot carry an incompleteness flag.
    """
    survey = type_membership(n, k, budget)
    if not survey.complete:
        from .search import BudgetExhausted

        raise BudgetExhausted(
            f"type survey for n={n}, k={k} exhausted its budget"
        )
    return survey.counts


def binary_reduce(
    prefix: Iterable[int], a: int, n: int
) -> tuple[int, int]:
    """Fold the first k-2 denominators into a two-term target.

    For prefix (m_1, ..., m_(k-2)), returns the integer pair (a', N') with
    N' = n * m_1 * ... * m_(k-2) and a'/N' = a/n - 1/m_1 - ... - 1/m_(k-2),
    so the final two denominators of any solution extending the prefix form
    a two-term representation of a'/N'.  The remainder must be nonnegative.
    """
    ms = tuple(prefix)
    if any(m < 1 for m in ms):
        raise ValueError("prefix denominators must be positive")
    if a < 0 or n < 1:
        raise ValueError("target a/n requires a >= 0 and n >= 1")
    product = 1
    for m in ms:
        product *= m
    big_n = n * product
    a_prime = a * product - sum(n * product // m for m in ms)
    if a_prime < 0:
        raise ValueError(
            f"prefix reciprocals exceed {a}/{n}: remainder {a_prime}/{big_n}"
        )
    return a_prime, big_n
