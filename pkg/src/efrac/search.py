"""Bounded depth-first enumeration of k-term unit-fraction representations.

A representation of a/n is a non-decreasing tuple (m_1, ..., m_k) of positive
integers with 1/m_1 + ... + 1/m_k = a/n.  The search walks denominators in
lexicographic order, carrying the remaining target as a reduced integer pair
p/q.  At each level with t terms still to place, the candidate interval is

    max(min_denom, floor(q/p) + 1)  <=  m  <=  floor(t*q/p)

The upper end comes from needing t reciprocals no larger than 1/m to reach
p/q (t/m >= p/q); the lower end from 1/m < p/q, strict because t-1 further
positive terms must fit.  With one term left the remainder itself must be a
unit fraction, which for a reduced pair is just p == 1 — no gcd at the leaf.

Budgets cap nodes (candidate denominators examined) and emitted solutions.
Exhausting a cap aborts the search and the result is flagged incomplete;
because the walk order is fixed, a larger budget always yields a superset of
solutions (prefix property).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

__all__ = [
    "BudgetExhausted",
    "EnumerationResult",
    "Representation",
    "SearchBudget",
    "count_representations",
    "denominator_bounds",
    "enumerate_representations",
    "exists",
]


class BudgetExhausted(RuntimeError):
    """A search hit its SearchBudget cap before it could finish."""


@dataclass(frozen=True)
class SearchBudget:
    """Caps on search effort; ``None`` means unlimited."""

    max_nodes: int | None = None
    max_solutions: int | None = None

    def __post_init__(self) -> None:
        if self.max_nodes is not None and self.max_nodes < 1:
            raise ValueError("max_nodes must be positive or None")
        if self.max_solutions is not None and self.max_solutions < 1:
            raise ValueError("max_solutions must be positive or None")


@dataclass(frozen=True)
class Representation:
    """A non-decreasing denominator tuple whose reciprocals sum to target.

    Both invariants are re-verified exactly on construction, so anything the
    enumerator emits has been checked against the target it was built for.
    """

    denominators: tuple[int, ...]
    target: Fraction

    def __post_init__(self) -> None:
        ms = self.denominators
        if not ms:
            raise ValueError("empty denominator tuple")
        if any(m < 1 for m in ms):
            raise ValueError("denominators must be positive")
        if any(a > b for a, b in zip(ms, ms[1:])):
            raise ValueError(f"denominators not non-decreasing: {ms}")
        total = sum(Fraction(1, m) for m in ms)
        if total != self.target:
            raise ValueError(f"sum of reciprocals is {total}, not {self.target}")

    def __len__(self) -> int:
        return len(self.denominators)


@dataclass
class EnumerationResult:
    """Solutions found plus search statistics.

    ``complete`` is False whenever a budget cap stopped the walk, including
    a max_solutions cap reached with unexplored candidates still pending:
    a truncated result is never reported as exhaustive.
    """

    representations: list[Representation] = field(default_factory=list)
    nodes: int = 0
    complete: bool = True


def denominator_bounds(
    remaining: Fraction, terms_left: int, min_denom: int = 1
) -> tuple[int, int]:
    """Inclusive interval [lo, hi] of admissible next denominators.

    The interval is empty exactly when lo > hi.  With one term left it
    degenerates to the single denominator of the remainder, provided the
    remainder is a unit fraction at least 1/min_denom.
    """
    if terms_left < 1:
        raise ValueError("terms_left must be positive")
    if min_denom < 1:
        raise ValueError("min_denom must be positive")
    if remaining <= 0:
        raise ValueError("remaining target must be positive")
    p, q = remaining.numerator, remaining.denominator
    if terms_left == 1:
        if p == 1 and q >= min_denom:
            return q, q
        return min_denom, min_denom - 1
    lo = max(min_denom, q // p + 1)
    hi = terms_left * q // p
    return lo, hi


def _search(
    p: int,
    q: int,
    k: int,
    max_nodes: float,
    max_solutions: float,
    floors: tuple[int | None, ...] | None = None,
    ceilings: tuple[int | None, ...] | None = None,
    collect: bool = True,
) -> tuple[list[tuple[int, ...]], int, int, bool]:
    """Core DFS over reduced remainder pairs.

    Returns (solutions, found, nodes, complete).  ``floors``/``ceilings``
    optionally constrain the first k-2 levels (index by level, 0-based):
    a floor forces m >= floor, a ceiling forces m < ceiling.  They are only
    consulted at levels with three or more terms left, which covers exactly
    the first k-2 positions.
    """
    out: list[tuple[int, ...]] = []
    state = [0, 0]  # nodes, found
    prefix: list[int] = []

    def rec(p: int, q: int, t: int, lo: int) -> bool:
        # Returns True when the walk must stop (a cap was hit).
        nodes, found = state
        if t == 1:
            if nodes >= max_nodes:
                return True
            state[0] = nodes + 1
            if p == 1 and q >= lo:
                if collect:
                    out.append((*prefix, q))
                state[1] = found + 1
                if state[1] >= max_solutions:
                    return True
            return False
        lo_m = q // p + 1
        if lo_m < lo:
            lo_m = lo
        hi_m = t * q // p
        if t == 2:
            for m in range(lo_m, hi_m + 1):
                if state[0] >= max_nodes:
                    return True
                state[0] += 1
                r = p * m - q
                qm = q * m
                if qm % r == 0:
                    last = qm // r
                    if last >= m:
                        if collect:
                            out.append((*prefix, m, last))
                        state[1] += 1
                        if state[1] >= max_solutions:
                            return True
            return False
        level = k - t
        if ceilings is not None:
            cap = ceilings[level]
            if cap is not None and hi_m >= cap:
                hi_m = cap - 1
        if floors is not None:
            floor = floors[level]
            if floor is not None and lo_m < floor:
                lo_m = floor
        for m in range(lo_m, hi_m + 1):
            if state[0] >= max_nodes:
                return True
            state[0] += 1
            r = p * m - q
            qm = q * m
            g = gcd(r, qm)
            prefix.append(m)
            stop = rec(r // g, qm // g, t - 1, m)
            prefix.pop()
            if stop:
                return True
        return False

    stopped = rec(p, q, k, 1)
    return out, state[1], state[0], not stopped


def _caps(budget: SearchBudget | None) -> tuple[float, float]:
    if budget is None:
        return float("inf"), float("inf")
    max_nodes = float("inf") if budget.max_nodes is None else budget.max_nodes
    max_solutions = (
        float("inf") if budget.max_solutions is None else budget.max_solutions
    )
    return max_nodes, max_solutions


def _validate(a: int, n: int, k: int) -> None:
    if a < 1 or n < 1:
        raise ValueError("target a/n requires a >= 1 and n >= 1")
    if k < 1:
        raise ValueError("term count k must be at least 1")


def enumerate_representations(
    a: int, n: int, k: int, budget: SearchBudget | None = None
) -> EnumerationResult:
    """All k-term representations of a/n in lexicographic denominator order."""
    _validate(a, n, k)
    g = gcd(a, n)
    max_nodes, max_solutions = _caps(budget)
    tuples, _, nodes, complete = _search(a // g, n // g, k, max_nodes, max_solutions)
    target = Fraction(a, n)
    reps = [Representation(t, target) for t in tuples]
    return EnumerationResult(reps, nodes, complete)


def exists(
    a: int, n: int, k: int, budget: SearchBudget | None = None
) -> bool | None:
    """Whether a/n has a k-term representation.

    Short-circuits on the first solution.  Returns None (undecided) only
    when the node budget ran out before any solution was found and before
    the search space was exhausted.
    """
    _validate(a, n, k)
    g = gcd(a, n)
    max_nodes, _ = _caps(budget)
    _, found, _, complete = _search(
        a // g, n // g, k, max_nodes, 1, collect=False
    )
    if found:
        return True
    return False if complete else None


def count_representations(
    a: int, n: int, k: int, budget: SearchBudget | None = None
) -> int:
    """Number of k-term representations of a/n.

    Raises BudgetExhausted if a cap stopped the search, since a truncated
    tally must not be mistaken for the true count.
    """
    _validate(a, n, k)
    g = gcd(a, n)
    max_nodes, max_solutions = _caps(budget)
    _, found, nodes, complete = _search(
        a // g, n // g, k, max_nodes, max_solutions, collect=False
    )
    if not complete:
        raise BudgetExhausted(
            f"search for {a}/{n} with k={k} stopped after {nodes} nodes "
            f"and {found} solutions"
        )
    return found
