"""Shared small graphs used across test modules."""

from __future__ import annotations

import pytest

from cfcolor.graph import Graph, build_graph


@pytest.fixture
def p3() -> Graph:
    return build_graph(3, [(0, 1), (1, 2)])


@pytest.fixture
def p4() -> Graph:
    return build_graph(4, [(0, 1), (1, 2), (2, 3)])


@pytest.fixture
def c4() -> Graph:
    return build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


@pytest.fixture
def c5() -> Graph:
    return build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])


@pytest.fixture
def spider() -> Graph:
    # centre 0 with three legs of length two
    return build_graph(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])


@pytest.fixture
def needs_three_tree() -> Graph:
    # smallest tree (6 vertices) with conflict-free index 3: two legs of
    # length two plus a pendant edge at the centre
    return build_graph(6, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5)])
