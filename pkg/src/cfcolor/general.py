"""Conflict-free colorings of arbitrary graphs by recursive class halving.

Given a proper vertex coloring with k classes, split the classes in half:
the edges crossing the split form a bipartite graph and get two fresh
colors via the dominating-set construction, while the edges inside either
half recurse with half as many classes. The partial coloring that results
uses at most 2*ceil(log2 k) colors, one extra color totalises it, and
cycles are handled directly with an alternating 2-coloring.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bipartite import bipartite_scf_coloring, extend_to_cf
from .coloring import UNCOLORED, EdgeColoring
from .errors import (
    CycleTooShortError,
    ImproperColoringError,
    IsolatedVertexError,
    SizeMismatchError,
)
from .graph import Graph, OddCycle, bipartition, build_graph


@dataclass(frozen=True)
class VertexColoring:
    """Proper vertex coloring; class_of[v] lies in 1..k."""

    k: int
    class_of: tuple[int, ...]


def greedy_vertex_coloring(g: Graph) -> VertexColoring:
    """Saturation-guided greedy coloring (DSATUR).

    Repeatedly picks the uncolored vertex seeing the most distinct classes,
    ties broken by smallest id, and gives it the smallest free class.
    Deterministic, and exact on bipartite graphs: within a component the
    colored region grows connectedly, so saturation never exceeds one.
    """
    class_of = [0] * g.n
    neighbour_classes: list[set[int]] = [set() for _ in range(g.n)]
    for _ in range(g.n):
        best = -1
        best_sat = -1
        for v in range(g.n):
            if class_of[v] == 0 and len(neighbour_classes[v]) > best_sat:
                best = v
                best_sat = len(neighbour_classes[v])
        c = 1
        while c in neighbour_classes[best]:
            c += 1
        class_of[best] = c
        for w, _ in g.adjacency[best]:
            neighbour_classes[w].add(c)
    k = max(class_of, default=0)
    return VertexColoring(k=k, class_of=tuple(class_of))


def _validate_proper(g: Graph, vc: VertexColoring) -> None:
    if len(vc.class_of) != g.n:
        raise SizeMismatchError(g.n, len(vc.class_of))
    for v, c in enumerate(vc.class_of):
        if not (1 <= c <= vc.k):
            raise ImproperColoringError((v, v))
    for u, v in g.edges:
        if vc.class_of[u] == vc.class_of[v]:
            raise ImproperColoringError((u, v))


def _ceil_log2(k: int) -> int:
    return max(1, (k - 1).bit_length())


def _color_level(
    g: Graph,
    edge_ids: list[int],
    cls: dict[int, int],
    khat: int,
    out: list[int],
) -> None:
    # One recursion level: classes 1..half versus the rest. Cross edges are
    # bipartite and take the two top colors of this level; the rest recurse
    # with renumbered classes. Endpoints of no edge at a level simply drop
    # out, so subgraphs never contain isolated vertices.
    if not edge_ids or khat <= 1:
        return
    t = _ceil_log2(khat)
    half = 1 << (t - 1)
    cross: list[int] = []
    rest: list[int] = []
    for eid in edge_ids:
        u, v = g.edges[eid]
        if (cls[u] <= half) != (cls[v] <= half):
            cross.append(eid)
        else:
            rest.append(eid)
    if cross:
        verts = sorted({w for eid in cross for w in g.edges[eid]})
        local = {w: i for i, w in enumerate(verts)}
        sub = build_graph(len(verts), [
            (local[g.edges[eid][0]], local[g.edges[eid][1]]) for eid in cross
        ])
        b = bipartition(sub)
        assert not isinstance(b, OddCycle)
        partial, _ = bipartite_scf_coloring(sub, b)
        base = 2 * t - 2
        for local_eid, col in enumerate(partial.colors):
            if col != UNCOLORED:
                out[cross[local_eid]] = base + col
    if rest:
        sub_cls = {
            w: (cls[w] if cls[w] <= half else cls[w] - half)
            for eid in rest
            for w in g.edges[eid]
        }
        _color_level(g, rest, sub_cls, half, out)


def recursive_scf_coloring(g: Graph, vc: VertexColoring) -> EdgeColoring:
    """Partial conflict-free coloring with at most 2*ceil(log2 k) colors."""
    _validate_proper(g, vc)
    for v in range(g.n):
        if g.degree(v) == 0:
            raise IsolatedVertexError(v)
    if g.m == 0:
        return EdgeColoring(k=0, colors=())
    out = [UNCOLORED] * g.m
    cls = {v: vc.class_of[v] for v in range(g.n)}
    _color_level(g, list(range(g.m)), cls, vc.k, out)
    return EdgeColoring(k=2 * _ceil_log2(vc.k), colors=tuple(out))


def general_cf_coloring(g: Graph) -> tuple[EdgeColoring, VertexColoring]:
    """Total conflict-free coloring with at most 2*ceil(log2 k) + 1 colors,
    where k is the class count found by greedy_vertex_coloring."""
    vc = greedy_vertex_coloring(g)
    partial = recursive_scf_coloring(g, vc)
    return extend_to_cf(g, partial), vc


def cycle_cf_coloring(n: int) -> EdgeColoring:
    """Total 2-coloring of the n-cycle: edges alternate 1, 2, 1, 2, ...

    Around any edge the closed neighbourhood holds three consecutive cycle
    edges, and with the alternating pattern one of the two colors appears
    exactly once there, wrap-around included. Two colors are also necessary
    for n >= 3 since a single color repeats in every neighbourhood.
    """
    if n < 3:
        raise CycleTooShortError(n)
    return EdgeColoring(k=2, colors=tuple(1 if i % 2 == 0 else 2 for i in range(n)))
