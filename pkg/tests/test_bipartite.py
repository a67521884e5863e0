import dataclasses

import pytest

from cfcolor.bipartite import (
    bipartite_cf_coloring,
    bipartite_scf_coloring,
    check_certificate,
    extend_to_cf,
    format_certificate,
    minimal_y_dominating_set,
)
from cfcolor.coloring import UNCOLORED, EdgeColoring, colors_used, verify_cf
from cfcolor.errors import (
    IsolatedVertexError,
    NotBipartiteError,
    PartialNotSatisfyingError,
)
from cfcolor.generators import complete_bipartite, cycle, path, random_bipartite
from cfcolor.graph import Bipartition, bipartition


def _bip(g) -> Bipartition:
    b = bipartition(g)
    assert isinstance(b, Bipartition)
    return b


def test_k33_certificate_golden():
    g = complete_bipartite(3, 3)
    cert = minimal_y_dominating_set(g, _bip(g))
    assert cert.dominating == (2,)
    assert cert.private == {2: (3, 4, 5)}
    # Vertex 2's smallest private neighbour is 3; edge (2, 3) has id 6.
    assert cert.matching == (6,)
    assert format_certificate(cert) == "D: 2\nP 2: 3 4 5\nM: 6\n"


def test_p4_certificate_golden(p4):
    # The ascending prune drops vertex 0 (vertex 2 already covers 1), so
    # vertex 2 alone dominates {1, 3} and both stay private to it.
    cert = minimal_y_dominating_set(p4, _bip(p4))
    assert cert.dominating == (2,)
    assert cert.private == {2: (1, 3)}
    assert cert.matching == (1,)
    assert format_certificate(cert) == "D: 2\nP 2: 1 3\nM: 1\n"


def test_minimality_every_member_has_private_neighbor():
    for seed in range(40):
        g = random_bipartite(6, 7, 0.4, seed)
        if g.m == 0:
            continue
        cert = minimal_y_dominating_set(g, _bip(g))
        for x in cert.dominating:
            assert cert.private[x], f"{x} has no private neighbour (seed {seed})"


def test_p4_partial_coloring(p4):
    col, _cert = bipartite_scf_coloring(p4, _bip(p4))
    assert col == EdgeColoring(k=2, colors=(UNCOLORED, 1, 2))
    assert verify_cf(p4, col).conflict_free()


def test_k33_partial_coloring_uses_both_colors():
    g = complete_bipartite(3, 3)
    col, _cert = bipartite_scf_coloring(g, _bip(g))
    assert col.k == 2
    assert sorted(c for c in col.colors if c) == [1, 2, 2]
    assert verify_cf(g, col).conflict_free()


def test_every_y_vertex_sees_exactly_one_colored_edge():
    for seed in range(60):
        g = random_bipartite(7, 7, 0.35, seed)
        if g.m == 0:
            continue
        b = _bip(g)
        col, _cert = bipartite_scf_coloring(g, b)
        for y in b.y_vertices():
            touched = [e for _, e in g.adjacency[y] if col.colors[e] != UNCOLORED]
            assert len(touched) == 1, f"y={y} seed={seed}"


def test_extend_to_cf_p4(p4):
    partial, _cert = bipartite_scf_coloring(p4, _bip(p4))
    total = extend_to_cf(p4, partial)
    assert total == EdgeColoring(k=3, colors=(3, 1, 2))
    assert verify_cf(p4, total).conflict_free()


def test_extend_uses_fresh_color_when_needed():
    g = complete_bipartite(3, 3)
    partial, _cert = bipartite_scf_coloring(g, _bip(g))
    total = extend_to_cf(g, partial)
    assert total.is_total()
    assert colors_used(total) == 3
    assert verify_cf(g, total).conflict_free()


def test_extend_picks_a_gap_color():
    # A satisfying partial whose palette skips color 1: the fill must use
    # the gap, not a color already present.
    g = path(4)
    partial = EdgeColoring(k=3, colors=(UNCOLORED, 2, 3))
    total = extend_to_cf(g, partial)
    assert total.colors == (1, 2, 3)


def test_extend_leaves_total_colorings_alone(p3):
    col = EdgeColoring(k=2, colors=(1, 2))
    assert extend_to_cf(p3, col) == col


def test_extend_rejects_unsatisfying_partial(p3):
    bad = EdgeColoring(k=1, colors=(1, 1))
    with pytest.raises(PartialNotSatisfyingError):
        extend_to_cf(p3, bad)


def test_bipartite_cf_coloring_end_to_end():
    for seed in range(60):
        g = random_bipartite(6, 8, 0.5, seed)
        if g.m == 0:
            continue
        total, cert = bipartite_cf_coloring(g)
        assert total.is_total()
        assert colors_used(total) <= 3
        assert verify_cf(g, total).conflict_free()
        assert check_certificate(g, _bip(g), cert)


def test_bipartite_cf_rejects_odd_cycle(c5):
    with pytest.raises(NotBipartiteError) as exc:
        bipartite_cf_coloring(c5)
    assert exc.value.odd_cycle is not None
    assert len(exc.value.odd_cycle) % 2 == 1


def test_scf_rejects_isolated_vertex():
    from cfcolor.graph import build_graph

    g = build_graph(3, [(0, 1)])
    with pytest.raises(IsolatedVertexError):
        bipartite_scf_coloring(g, _bip(g))


def test_even_cycles_get_at_most_three_colors():
    for n in (4, 6, 8, 10):
        g = cycle(n)
        total, _cert = bipartite_cf_coloring(g)
        assert colors_used(total) <= 3
        assert verify_cf(g, total).conflict_free()


def test_check_certificate_accepts_genuine():
    for seed in range(40):
        g = random_bipartite(6, 6, 0.4, seed)
        if g.m == 0:
            continue
        b = _bip(g)
        assert check_certificate(g, b, minimal_y_dominating_set(g, b))


def test_check_certificate_rejects_tampering():
    g = complete_bipartite(3, 3)
    b = _bip(g)
    cert = minimal_y_dominating_set(g, b)

    # Nothing dominates Y any more.
    empty = dataclasses.replace(cert, dominating=(), private={}, matching=())
    assert not check_certificate(g, b, empty)
    # Vertex 3 has two D-neighbours, so it is not private to 1.
    fat = dataclasses.replace(
        cert, dominating=(1, 2), private={1: (3,), 2: (4, 5)}, matching=(3, 7)
    )
    assert not check_certificate(g, b, fat)
    # Edge 0 joins vertex 0 (outside D) to vertex 3.
    stray = dataclasses.replace(cert, matching=(0,))
    assert not check_certificate(g, b, stray)
    # Two matching edges sharing vertex 2 are not a matching.
    doubled = dataclasses.replace(cert, matching=(6, 7))
    assert not check_certificate(g, b, doubled)
    # Private set claimed empty for its owner.
    hollow = dataclasses.replace(cert, private={2: ()})
    assert not check_certificate(g, b, hollow)


def test_construction_is_deterministic():
    g = random_bipartite(8, 8, 0.5, 12345)
    b = _bip(g)
    assert bipartite_scf_coloring(g, b) == bipartite_scf_coloring(g, b)
    assert bipartite_cf_coloring(g) == bipartite_cf_coloring(g)


def test_p3_total_needs_only_two(p3):
    partial, _cert = bipartite_scf_coloring(p3, _bip(p3))
    assert partial.colors == (UNCOLORED, 1)
    total = extend_to_cf(p3, partial)
    assert total.colors == (2, 1)
    assert colors_used(total) == 2


def test_single_edge():
    total, cert = bipartite_cf_coloring(path(2))
    assert total.colors == (1,)
    assert cert.dominating == (0,)
