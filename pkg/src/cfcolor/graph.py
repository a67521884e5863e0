"""Immutable simple graphs with stable edge ids, plus bipartition testing.

Vertices are ``0..n-1``. Edges keep the order in which they were given and
are addressed everywhere by their position in that list (the edge id).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import (
    DuplicateEdgeError,
    FormatError,
    SelfLoopError,
    VertexOutOfRangeError,
)


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph.

    Attributes:
        n: number of vertices.
        edges: edge list as (u, v) pairs, edge id = list position.
        adjacency: per vertex, tuple of (neighbour, edge_id) in edge order.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[tuple[int, int], ...], ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def edge_id(self, u: int, v: int) -> int | None:
        """Id of the edge joining u and v, or None if absent. O(deg u)."""
        for w, eid in self.adjacency[u]:
            if w == v:
                return eid
        return None


def build_graph(n: int, edges: list[tuple[int, int]] | tuple[tuple[int, int], ...]) -> Graph:
    """Validate an edge list and freeze it into a Graph.

    Rejects self loops, duplicate edges (in either orientation) and endpoint
    ids outside ``0..n-1``; the raised error names the offending position.
    """
    if n < 0:
        raise VertexOutOfRangeError(0, n, 0)
    seen: set[tuple[int, int]] = set()
    adjacency: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    frozen: list[tuple[int, int]] = []
    for pos, (u, v) in enumerate(edges):
        if not (0 <= u < n):
            raise VertexOutOfRangeError(pos, u, n)
        if not (0 <= v < n):
            raise VertexOutOfRangeError(pos, v, n)
        if u == v:
            raise SelfLoopError(pos, u)
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdgeError(pos, (u, v))
        seen.add(key)
        adjacency[u].append((v, pos))
        adjacency[v].append((u, pos))
        frozen.append((u, v))
    return Graph(n=n, edges=tuple(frozen), adjacency=tuple(tuple(a) for a in adjacency))


@dataclass(frozen=True)
class Bipartition:
    """Two-sided vertex labelling; side[v] is "X" or "Y"."""

    side: tuple[str, ...]

    def x_vertices(self) -> list[int]:
        return [v for v, s in enumerate(self.side) if s == "X"]

    def y_vertices(self) -> list[int]:
        return [v for v, s in enumerate(self.side) if s == "Y"]


@dataclass(frozen=True)
class OddCycle:
    """Witness of non-bipartiteness: an odd closed vertex sequence.

    Consecutive vertices are adjacent and the last is adjacent to the first.
    """

    vertices: tuple[int, ...]


def bipartition(g: Graph) -> Bipartition | OddCycle:
    """Two-color g by BFS, or return an odd cycle if that is impossible.

    Deterministic: each component is explored from its smallest vertex,
    which is labelled X; neighbours are visited in ascending id order.
    Isolated vertices therefore land on side X.
    """
    side: list[str | None] = [None] * g.n
    parent: list[int] = [-1] * g.n
    depth: list[int] = [0] * g.n
    for root in range(g.n):
        if side[root] is not None:
            continue
        side[root] = "X"
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v, _ in sorted(g.adjacency[u]):
                if side[v] is None:
                    side[v] = "Y" if side[u] == "X" else "X"
                    parent[v] = u
                    depth[v] = depth[u] + 1
                    queue.append(v)
                elif side[v] == side[u]:
                    return OddCycle(vertices=_close_cycle(u, v, parent, depth))
    return Bipartition(side=tuple(s for s in side if s is not None))


def _close_cycle(u: int, v: int, parent: list[int], depth: list[int]) -> tuple[int, ...]:
    # Walk both endpoints up the BFS tree to their lowest common ancestor;
    # the two tree paths plus the edge uv form an odd cycle.
    up_u: list[int] = [u]
    up_v: list[int] = [v]
    while depth[up_u[-1]] > depth[up_v[-1]]:
        up_u.append(parent[up_u[-1]])
    while depth[up_v[-1]] > depth[up_u[-1]]:
        up_v.append(parent[up_v[-1]])
    while up_u[-1] != up_v[-1]:
        up_u.append(parent[up_u[-1]])
        up_v.append(parent[up_v[-1]])
    # up_u ends at the LCA; attach the v-side path in reverse, LCA excluded.
    return tuple(up_u + up_v[-2::-1])


def components(g: Graph) -> list[tuple[int, ...]]:
    """Connected components as sorted vertex tuples, ordered by smallest member."""
    seen = [False] * g.n
    out: list[tuple[int, ...]] = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        comp = [root]
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v, _ in sorted(g.adjacency[u]):
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    queue.append(v)
        out.append(tuple(sorted(comp)))
    return out


def has_isolated_vertex(g: Graph) -> bool:
    return any(len(a) == 0 for a in g.adjacency)


def parse_edge_list(text: str) -> Graph:
    """Read the plain edge-list format.

    First non-comment line is ``n m``, followed by m lines ``u v``.
    Lines starting with ``#`` and blank lines are ignored.
    """
    rows: list[list[str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append(line.split())
    if not rows:
        raise FormatError("empty edge list input")
    head = rows[0]
    if len(head) != 2:
        raise FormatError(f"header must be 'n m', got {' '.join(head)!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise FormatError(f"header must be two integers, got {' '.join(head)!r}") from exc
    if len(rows) - 1 != m:
        raise FormatError(f"header promises {m} edges, found {len(rows) - 1}")
    edges: list[tuple[int, int]] = []
    for row in rows[1:]:
        if len(row) != 2:
            raise FormatError(f"edge line must be 'u v', got {' '.join(row)!r}")
        try:
            edges.append((int(row[0]), int(row[1])))
        except ValueError as exc:
            raise FormatError(f"edge line must be two integers, got {' '.join(row)!r}") from exc
    return build_graph(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"
