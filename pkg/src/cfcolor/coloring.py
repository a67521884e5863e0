"""Partial edge colorings and the conflict-free satisfaction verifier.

An edge uv is *satisfied* when some color appears on exactly one colored
edge of its closed edge neighbourhood: all edges incident to u or to v,
including uv itself. A coloring (total or partial) is conflict-free when
every edge of the graph is satisfied.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .errors import EdgeOutOfRangeError, FormatError, SizeMismatchError
from .graph import Graph

UNCOLORED = 0


@dataclass(frozen=True)
class EdgeColoring:
    """Per-edge color assignment; color 0 means uncolored.

    Attributes:
        k: size of the palette, assigned colors lie in 1..k.
        colors: color of each edge id, 0 for uncolored.
    """

    k: int
    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.k < 0:
            raise ValueError(f"palette size must be >= 0, got {self.k}")
        for eid, c in enumerate(self.colors):
            if not (0 <= c <= self.k):
                raise ValueError(f"edge {eid} has color {c} outside 0..{self.k}")

    def is_total(self) -> bool:
        return all(c != UNCOLORED for c in self.colors)


@dataclass(frozen=True)
class SatisfactionReport:
    """Outcome of verifying a coloring edge by edge.

    ``witness[e]`` is the smallest color that appears exactly once in the
    colored closed neighbourhood of e; edges without such a color are listed
    in ``unsatisfied``. Together they cover every edge exactly once.
    """

    unsatisfied: tuple[int, ...]
    witness: dict[int, int]

    def conflict_free(self) -> bool:
        return not self.unsatisfied


def closed_neighborhood(g: Graph, e: int) -> list[int]:
    """Sorted edge ids incident to either endpoint of e (e included)."""
    if not (0 <= e < g.m):
        raise EdgeOutOfRangeError(e, g.m)
    u, v = g.edges[e]
    ids = {eid for _, eid in g.adjacency[u]}
    ids.update(eid for _, eid in g.adjacency[v])
    return sorted(ids)


def _check_sizes(g: Graph, c: EdgeColoring) -> None:
    if len(c.colors) != g.m:
        raise SizeMismatchError(g.m, len(c.colors))


def is_satisfied(g: Graph, c: EdgeColoring, e: int) -> bool:
    """Does some color appear exactly once among colored edges around e?"""
    _check_sizes(g, c)
    counts = Counter(
        c.colors[f] for f in closed_neighborhood(g, e) if c.colors[f] != UNCOLORED
    )
    return any(cnt == 1 for cnt in counts.values())


def verify_cf(g: Graph, c: EdgeColoring) -> SatisfactionReport:
    """Check every edge of g against c.

    Runs in O(sum over edges of deg(u) + deg(v)) via per-vertex color
    counts: the multiplicity of color x around edge uv is
    count_u[x] + count_v[x], minus one if uv itself carries x (uv is the
    only edge incident to both endpoints, so nothing else double counts).
    """
    _check_sizes(g, c)
    per_vertex: list[dict[int, int]] = [dict() for _ in range(g.n)]
    for (u, v), col in zip(g.edges, c.colors):
        if col == UNCOLORED:
            continue
        per_vertex[u][col] = per_vertex[u].get(col, 0) + 1
        per_vertex[v][col] = per_vertex[v].get(col, 0) + 1
    unsatisfied: list[int] = []
    witness: dict[int, int] = {}
    for eid, (u, v) in enumerate(g.edges):
        own = c.colors[eid]
        cu, cv = per_vertex[u], per_vertex[v]
        best: int | None = None
        for col, cnt in cu.items():
            total = cnt + cv.get(col, 0) - (1 if col == own else 0)
            if total == 1 and (best is None or col < best):
                best = col
        for col, cnt in cv.items():
            if col in cu:
                continue
            total = cnt - (1 if col == own else 0)
            if total == 1 and (best is None or col < best):
                best = col
        if best is None:
            unsatisfied.append(eid)
        else:
            witness[eid] = best
    return SatisfactionReport(unsatisfied=tuple(unsatisfied), witness=witness)


def colors_used(c: EdgeColoring) -> int:
    """Number of distinct colors actually assigned."""
    return len({x for x in c.colors if x != UNCOLORED})


def parse_coloring(text: str) -> EdgeColoring:
    """Read the coloring format: header ``m k`` then m lines ``edge_id color``.

    Edge ids must be exhaustive and ascending; color 0 marks uncolored.
    """
    rows: list[list[str]] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append(line.split())
    if not rows:
        raise FormatError("empty coloring input")
    head = rows[0]
    if len(head) != 2:
        raise FormatError(f"header must be 'm k', got {' '.join(head)!r}")
    try:
        m, k = int(head[0]), int(head[1])
    except ValueError as exc:
        raise FormatError(f"header must be two integers, got {' '.join(head)!r}") from exc
    if len(rows) - 1 != m:
        raise FormatError(f"header promises {m} entries, found {len(rows) - 1}")
    colors = [UNCOLORED] * m
    for expect, row in enumerate(rows[1:]):
        if len(row) != 2:
            raise FormatError(f"entry must be 'edge_id color', got {' '.join(row)!r}")
        try:
            eid, col = int(row[0]), int(row[1])
        except ValueError as exc:
            raise FormatError(f"entry must be two integers, got {' '.join(row)!r}") from exc
        if eid != expect:
            raise FormatError(f"edge ids must be 0..{m - 1} in order, got {eid} at line {expect}")
        if not (0 <= col <= k):
            raise FormatError(f"edge {eid} has color {col} outside 0..{k}")
        colors[eid] = col
    return EdgeColoring(k=k, colors=tuple(colors))


def format_coloring(c: EdgeColoring) -> str:
    lines = [f"{len(c.colors)} {c.k}"]
    lines.extend(f"{eid} {col}" for eid, col in enumerate(c.colors))
    return "\n".join(lines) + "\n"
