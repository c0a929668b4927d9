import math

import pytest
from hypothesis import given, settings, strategies as st

from strongorient.corpus import grid, pentagon_book
from strongorient.graph import (
    MultiGraph,
    bfs_distances,
    diameter,
    edge_girth,
    find_bridges,
    graph_edge_girth,
    is_connected,
)

INF = math.inf


def cycle(n):
    return MultiGraph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return MultiGraph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


@st.composite
def multigraphs(draw, max_n=8, max_m=14):
    n = draw(st.integers(2, max_n))
    m = draw(st.integers(1, max_m))
    edges = []
    for _ in range(m):
        a = draw(st.integers(0, n - 1))
        b = draw(st.integers(0, n - 1))
        if a != b:
            edges.append((a, b))
    if not edges:
        edges = [(0, 1)]
    return MultiGraph(n, edges)


def brute_shortest_cycle_through(g, eid):
    """Independent check: DFS over simple paths between the endpoints."""
    a, b = g.ends[eid]
    best = [INF]

    def walk(v, seen, length):
        if length >= best[0]:
            return
        for e2, w in g.incident(v):
            if e2 == eid:
                continue
            if w == b:
                best[0] = min(best[0], length + 1)
            elif w not in seen:
                walk(w, seen | {w}, length + 1)

    walk(a, {a}, 0)
    return best[0] + 1 if best[0] is not INF else INF


def test_bfs_path():
    g = MultiGraph(3, [(0, 1), (1, 2)])
    assert bfs_distances(g, 0) == [0, 1, 2]


def test_bfs_cycle9_eccentricity():
    d = bfs_distances(cycle(9), 0)
    assert max(d) == 4


def test_bfs_disconnected():
    g = MultiGraph(4, [(0, 1), (2, 3)])
    assert bfs_distances(g, 0)[2] is INF


def test_diameter_values():
    assert diameter(cycle(9)) == 4
    assert diameter(grid(2, 4)) == 4
    assert diameter(complete(4)) == 1
    assert diameter(MultiGraph(3, [(0, 1)])) is INF


def test_bridges_path_and_cycle():
    path = MultiGraph(3, [(0, 1), (1, 2)])
    assert find_bridges(path) == {0, 1}
    assert find_bridges(cycle(5)) == set()


def test_bridges_two_triangles_joined():
    g = MultiGraph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)])
    assert find_bridges(g) == {6}


def test_parallel_pair_not_bridge():
    g = MultiGraph(2, [(0, 1), (0, 1)])
    assert find_bridges(g) == set()
    assert edge_girth(g, 0) == 2


def test_edge_girth_values():
    c5 = cycle(5)
    assert all(edge_girth(c5, e) == 5 for e in range(5))
    k4 = complete(4)
    assert all(edge_girth(k4, e) == 3 for e in range(6))
    bridged = MultiGraph(3, [(0, 1), (1, 2)])
    assert edge_girth(bridged, 0) is INF


def test_graph_edge_girth():
    assert graph_edge_girth(cycle(9)) == 9
    assert graph_edge_girth(MultiGraph(3, [(0, 1), (1, 2)])) is INF
    assert graph_edge_girth(pentagon_book(2)) == 5


def test_grid_girth_matches_brute_force():
    g = grid(2, 4)
    for e in range(g.m):
        assert edge_girth(g, e) == brute_shortest_cycle_through(g, e) == 4
    assert graph_edge_girth(g) == 4


@settings(max_examples=120, deadline=None)
@given(multigraphs())
def test_bridge_iff_infinite_edge_girth(g):
    bridges = find_bridges(g)
    for e in range(g.m):
        assert (edge_girth(g, e) is INF) == (e in bridges)


@settings(max_examples=80, deadline=None)
@given(multigraphs())
def test_edge_girth_matches_brute_force(g):
    for e in range(g.m):
        assert edge_girth(g, e) == brute_shortest_cycle_through(g, e)


@settings(max_examples=80, deadline=None)
@given(multigraphs())
def test_bfs_symmetry_and_triangle(g):
    dist = [bfs_distances(g, v) for v in range(g.n)]
    for a in range(g.n):
        for b in range(g.n):
            assert dist[a][b] == dist[b][a]
            for c in range(g.n):
                assert dist[a][c] <= dist[a][b] + dist[b][c]


def test_girth_bounds_for_bridgeless(subtests=None):
    for g in (cycle(9), grid(2, 4), complete(4), pentagon_book(3)):
        if not is_connected(g) or find_bridges(g):
            continue
        gstar = graph_edge_girth(g)
        assert gstar <= 2 * diameter(g) + 1
        assert gstar >= min(edge_girth(g, e) for e in range(g.m))
