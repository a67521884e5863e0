"""Exact conflict-free indices by pruned exhaustive search.

Intended for small instances: the search walks edges in id order, breaks
color symmetry canonically (edge 0 gets color 1, and color c may be used
only once colors below c appear), and prunes a branch as soon as some edge
whose closed neighbourhood is fully assigned has no exactly-once color.
Work is metered in enumerated partial states against an explicit budget,
and running out of budget is reported as a distinct outcome, never as a
number.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .coloring import closed_neighborhood
from .errors import BudgetExceededError, IsolatedVertexError
from .graph import Graph

DEFAULT_MAX_STATES = 100_000_000


@dataclass(frozen=True)
class OracleBudget:
    """Per-call cap on enumerated partial states."""

    max_states: int = DEFAULT_MAX_STATES


@dataclass(frozen=True)
class Exceeded:
    """The search hit its budget before finishing."""

    states: int


class _BudgetHit(Exception):
    pass


def _require_no_isolated(g: Graph) -> None:
    for v in range(g.n):
        if g.degree(v) == 0:
            raise IsolatedVertexError(v)


def _search(g: Graph, k: int, allow_uncolored: bool, meter: list[int], max_states: int) -> bool:
    """Is there a conflict-free assignment with colors 1..k (0 allowed when
    partial colorings are searched)?"""
    m = g.m
    nbhd = [closed_neighborhood(g, e) for e in range(m)]
    # An edge's satisfaction is final once the largest id in its closed
    # neighbourhood is assigned; check it exactly there.
    check_at: list[list[int]] = [[] for _ in range(m)]
    for e in range(m):
        check_at[max(nbhd[e])].append(e)
    colors = [0] * m

    def fixed_ok(e: int) -> bool:
        counts = Counter(colors[f] for f in nbhd[e] if colors[f] != 0)
        return any(c == 1 for c in counts.values())

    def dfs(i: int, used_max: int) -> bool:
        if i == m:
            return True
        options = ([0] if allow_uncolored else []) + list(range(1, min(k, used_max + 1) + 1))
        for col in options:
            meter[0] += 1
            if meter[0] > max_states:
                raise _BudgetHit()
            colors[i] = col
            if all(fixed_ok(e) for e in check_at[i]):
                if dfs(i + 1, max(used_max, col)):
                    return True
        return False

    return dfs(0, 0)


def _smallest_k(
    g: Graph, k_max: int, allow_uncolored: bool, budget: OracleBudget
) -> int | None | Exceeded:
    _require_no_isolated(g)
    if g.m == 0:
        return 0
    meter = [0]
    try:
        for k in range(1, k_max + 1):
            if _search(g, k, allow_uncolored, meter, budget.max_states):
                return k
    except _BudgetHit:
        return Exceeded(states=meter[0])
    return None


def exact_cf_index(
    g: Graph, k_max: int, budget: OracleBudget = OracleBudget()
) -> int | None | Exceeded:
    """Smallest k <= k_max admitting a total conflict-free k-coloring.

    None means the search completed and no such k exists; Exceeded means
    the budget ran out first.
    """
    return _smallest_k(g, k_max, allow_uncolored=False, budget=budget)


def exact_scf_index(
    g: Graph, k_max: int, budget: OracleBudget = OracleBudget()
) -> int | None | Exceeded:
    """Smallest k <= k_max admitting a partial conflict-free coloring
    (edges may stay uncolored; every edge of the graph must be satisfied)."""
    return _smallest_k(g, k_max, allow_uncolored=True, budget=budget)


def sandwich_check(g: Graph, budget: OracleBudget = OracleBudget()) -> bool:
    """Exhaustively confirm scf <= cf <= scf + 1 on one graph.

    Both exact values are computed with k_max = m, always enough because
    all-distinct colors are trivially conflict-free. Raises
    BudgetExceededError if either search runs out of budget.
    """
    _require_no_isolated(g)
    if g.m == 0:
        return True
    scf = exact_scf_index(g, g.m, budget)
    if isinstance(scf, Exceeded):
        raise BudgetExceededError(scf.states)
    cf = exact_cf_index(g, g.m, budget)
    if isinstance(cf, Exceeded):
        raise BudgetExceededError(cf.states)
    assert scf is not None and cf is not None
    return scf <= cf <= scf + 1
