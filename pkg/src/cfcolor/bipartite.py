"""Conflict-free colorings of bipartite graphs via dominating-set certificates.

A minimal Y-dominating set D inside X has a private neighbour for each of
its members, which yields a matching M covering D. Coloring M with color 1
and one extra D-edge per unmatched Y vertex with color 2 satisfies every
edge while leaving most edges uncolored; filling the rest with a third
color gives a total conflict-free coloring. So bipartite graphs need at
most 2 colors partially and 3 totally.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import UNCOLORED, EdgeColoring, verify_cf
from .errors import (
    ExtensionUnsatisfiedError,
    IsolatedVertexError,
    IsolatedYVertexError,
    NotBipartiteError,
    PartialNotSatisfyingError,
)
from .graph import Bipartition, Graph, OddCycle, bipartition


@dataclass(frozen=True)
class DominationCertificate:
    """Checkable evidence behind the two-color construction.

    Attributes:
        dominating: minimal Y-dominating set D, sorted, subset of side X.
        private: for each x in D, the Y vertices whose only D-neighbour is x.
        matching: edge ids matching each x in D to one private neighbour.
    """

    dominating: tuple[int, ...]
    private: dict[int, tuple[int, ...]]
    matching: tuple[int, ...]


def _validate_sides(g: Graph, b: Bipartition) -> None:
    if len(b.side) != g.n:
        raise NotBipartiteError()
    for u, v in g.edges:
        if b.side[u] == b.side[v]:
            raise NotBipartiteError()


def minimal_y_dominating_set(g: Graph, b: Bipartition) -> DominationCertificate:
    """Build a minimal set D in X dominating Y, with privates and matching.

    Deterministic: start from every X vertex with a neighbour, then scan in
    ascending id order dropping any vertex whose removal keeps Y dominated,
    repeating until a full pass removes nothing. Each x then keeps a private
    neighbour (else it would have been dropped), and matching x to its
    smallest private neighbour is a matching since private sets are disjoint.
    """
    _validate_sides(g, b)
    y_all = b.y_vertices()
    for y in y_all:
        if g.degree(y) == 0:
            raise IsolatedYVertexError(y)
    in_d = [False] * g.n
    for x in b.x_vertices():
        if g.degree(x) > 0:
            in_d[x] = True
    # cover[y] = number of D-members adjacent to y
    cover = [0] * g.n
    for y in y_all:
        cover[y] = sum(1 for x, _ in g.adjacency[y] if in_d[x])
    changed = True
    while changed:
        changed = False
        for x in range(g.n):
            if not in_d[x]:
                continue
            if all(cover[y] >= 2 for y, _ in g.adjacency[x]):
                in_d[x] = False
                for y, _ in g.adjacency[x]:
                    cover[y] -= 1
                changed = True
    dominating = tuple(x for x in range(g.n) if in_d[x])
    private: dict[int, tuple[int, ...]] = {}
    for x in dominating:
        private[x] = tuple(sorted(y for y, _ in g.adjacency[x] if cover[y] == 1))
    matching = []
    for x in dominating:
        y = private[x][0]
        eid = g.edge_id(x, y)
        assert eid is not None
        matching.append(eid)
    return DominationCertificate(
        dominating=dominating, private=private, matching=tuple(sorted(matching))
    )


def check_certificate(g: Graph, b: Bipartition, cert: DominationCertificate) -> bool:
    """Re-derive every claim the certificate makes; True only if all hold.

    Checks: D lies in X and dominates all of Y; every listed private
    neighbour has exactly its owner as D-neighbour and every member of D
    owns at least one; private sets are pairwise disjoint; the matching is a
    matching of D-to-private edges covering D.
    """
    try:
        _validate_sides(g, b)
    except NotBipartiteError:
        return False
    d_set = set(cert.dominating)
    x_set = set(b.x_vertices())
    if not d_set <= x_set:
        return False
    for y in b.y_vertices():
        if not any(x in d_set for x, _ in g.adjacency[y]):
            return False
    if set(cert.private.keys()) != d_set:
        return False
    seen_private: set[int] = set()
    for x, ys in cert.private.items():
        if not ys:
            return False
        for y in ys:
            if {w for w, _ in g.adjacency[y] if w in d_set} != {x}:
                return False
            if y in seen_private:
                return False
            seen_private.add(y)
    covered: set[int] = set()
    touched: set[int] = set()
    for eid in cert.matching:
        if not (0 <= eid < g.m):
            return False
        u, v = g.edges[eid]
        x, y = (u, v) if u in d_set else (v, u)
        if x not in d_set or y not in cert.private.get(x, ()):
            return False
        if x in touched or y in touched:
            return False
        touched.update((x, y))
        covered.add(x)
    return covered == d_set


def bipartite_scf_coloring(
    g: Graph, b: Bipartition
) -> tuple[EdgeColoring, DominationCertificate]:
    """Two-color enough edges of a bipartite graph to satisfy all of them.

    Matching edges get color 1; every Y vertex missed by the matching gets
    the edge to its smallest D-neighbour in color 2. Every Y vertex ends up
    incident to exactly one colored edge, which is what makes each edge see
    a color exactly once.
    """
    for v in range(g.n):
        if g.degree(v) == 0:
            raise IsolatedVertexError(v)
    cert = minimal_y_dominating_set(g, b)
    colors = [UNCOLORED] * g.m
    matched_y: set[int] = set()
    d_set = set(cert.dominating)
    for eid in cert.matching:
        colors[eid] = 1
        u, v = g.edges[eid]
        matched_y.add(v if u in d_set else u)
    for y in b.y_vertices():
        if y in matched_y:
            continue
        best: tuple[int, int] | None = None
        for x, eid in g.adjacency[y]:
            if x in d_set and (best is None or x < best[0]):
                best = (x, eid)
        assert best is not None
        colors[best[1]] = 2
    return EdgeColoring(k=2, colors=tuple(colors)), cert


def extend_to_cf(g: Graph, partial: EdgeColoring) -> EdgeColoring:
    """Fill the uncolored edges of a satisfying partial coloring.

    All uncolored edges receive one single color absent from the partial,
    which leaves every existing exactly-once witness intact. The fresh
    color is the smallest unused one: k+1 whenever the partial uses colors
    1..k, and a lower gap color when the palette is non-contiguous (the
    level recursion produces such partials when a level has no edges).
    The result is re-verified rather than trusted, and a failure raises
    ExtensionUnsatisfiedError.
    """
    report = verify_cf(g, partial)
    if report.unsatisfied:
        raise PartialNotSatisfyingError(list(report.unsatisfied))
    if partial.is_total():
        return partial
    assigned = {c for c in partial.colors if c != UNCOLORED}
    fresh = 1
    while fresh in assigned:
        fresh += 1
    filled = tuple(c if c != UNCOLORED else fresh for c in partial.colors)
    total = EdgeColoring(k=max(partial.k, fresh), colors=filled)
    recheck = verify_cf(g, total)
    if recheck.unsatisfied:
        raise ExtensionUnsatisfiedError(recheck.unsatisfied[0])
    return total


def bipartite_cf_coloring(g: Graph) -> tuple[EdgeColoring, DominationCertificate]:
    """Total conflict-free coloring of a bipartite graph with at most 3 colors."""
    for v in range(g.n):
        if g.degree(v) == 0:
            raise IsolatedVertexError(v)
    b = bipartition(g)
    if isinstance(b, OddCycle):
        raise NotBipartiteError(b.vertices)
    partial, cert = bipartite_scf_coloring(g, b)
    return extend_to_cf(g, partial), cert


def format_certificate(cert: DominationCertificate) -> str:
    """Dump for golden tests: D line, one line per private set, M line."""
    lines = ["D: " + " ".join(str(x) for x in cert.dominating)]
    for x in cert.dominating:
        lines.append(f"P {x}: " + " ".join(str(y) for y in cert.private[x]))
    lines.append("M: " + " ".join(str(e) for e in cert.matching))
    return "\n".join(lines) + "\n"
