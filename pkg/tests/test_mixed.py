import math

import pytest
from hypothesis import given, settings, strategies as st

from strongorient.errors import ConflictError
from strongorient.graph import MultiGraph, diameter
from strongorient.mixed import BACKWARD, FORWARD, UNDIRECTED, MixedOrientation

INF = math.inf


def directed_cycle(n):
    g = MultiGraph(n, [(i, (i + 1) % n) for i in range(n)])
    o = MixedOrientation(g)
    for e in range(n):
        o.set_direction(e, FORWARD, "t")
    return o


def test_set_direction_records_and_logs():
    g = MultiGraph(2, [(0, 1)])
    o = MixedOrientation(g)
    o.set_direction(0, FORWARD, "s1")
    assert o.arc(0) == (0, 1)
    assert o.stage_log == [("s1", [0])]


def test_set_direction_idempotent_and_conflicting():
    g = MultiGraph(2, [(0, 1)])
    o = MixedOrientation(g)
    o.set_direction(0, FORWARD, "s1")
    o.set_direction(0, FORWARD, "s2")  # same direction: no-op
    assert o.stage_log == [("s1", [0])]
    with pytest.raises(ConflictError):
        o.set_direction(0, BACKWARD, "s3")


def test_undirected_vertices():
    g = MultiGraph(4, [(0, 1), (1, 2)])
    o = MixedOrientation(g)
    assert all(o.is_undirected_vertex(v) for v in range(4))
    o.set_direction(0, FORWARD, "t")
    assert not o.is_undirected_vertex(0)
    assert not o.is_undirected_vertex(1)
    assert o.is_undirected_vertex(2)
    assert o.is_undirected_vertex(3)  # isolated vertex stays undirected
    assert o.directed_vertices() == {0, 1}


def test_distances_ignore_undirected_edges():
    g = MultiGraph(3, [(0, 1), (1, 2)])
    o = MixedOrientation(g)
    assert o.directed_distances_from(0)[1] is INF
    o.set_direction(0, FORWARD, "t")
    d = o.directed_distances_from(0)
    assert d[1] == 1 and d[2] is INF


def test_directed_cycle_distances_and_diameter():
    o = directed_cycle(3)
    assert o.directed_distances_from(0) == [0, 1, 2]
    assert o.is_strong()
    assert o.directed_diameter() == 2
    assert directed_cycle(4).directed_diameter() == 3


def test_two_cycle_parallel_pair():
    g = MultiGraph(2, [(0, 1), (0, 1)])
    o = MixedOrientation(g)
    o.set_direction(0, FORWARD, "t")
    o.set_direction(1, BACKWARD, "t")
    assert o.is_strong()
    assert o.directed_diameter() == 1


def test_single_arc_not_strong():
    g = MultiGraph(2, [(0, 1)])
    o = MixedOrientation(g)
    o.set_direction(0, FORWARD, "t")
    assert not o.is_strong()
    assert o.directed_diameter() is INF


def test_theta():
    g = MultiGraph(2, [(0, 1), (0, 1)])
    o = MixedOrientation(g)
    o.set_direction(0, FORWARD, "t")
    o.set_direction(1, BACKWARD, "t")
    assert o.theta(0, {1}) == 1
    g2 = MultiGraph(3, [(0, 1), (1, 2)])
    o2 = MixedOrientation(g2)
    assert o2.theta(0, {2}) is INF
    with pytest.raises(ValueError):
        o2.theta(0, set())
    with pytest.raises(ValueError):
        o2.theta(0, {0, 1})


@st.composite
def random_digraphs(draw):
    n = draw(st.integers(2, 7))
    m = draw(st.integers(1, 12))
    edges = []
    for _ in range(m):
        a = draw(st.integers(0, n - 1))
        b = draw(st.integers(0, n - 1))
        if a != b:
            edges.append((a, b))
    if not edges:
        edges = [(0, 1)]
    g = MultiGraph(n, edges)
    o = MixedOrientation(g)
    for e in range(g.m):
        if draw(st.booleans()):
            o.set_direction(e, FORWARD if draw(st.booleans()) else BACKWARD, "t")
    return o


@settings(max_examples=100, deadline=None)
@given(random_digraphs())
def test_forward_and_reverse_distances_agree(o):
    n = o.base.n
    fwd = [o.directed_distances_from(v) for v in range(n)]
    for y in range(n):
        back = o.directed_distances_to(y)
        for x in range(n):
            assert fwd[x][y] == back[x]


def test_strong_orientation_never_beats_undirected_diameter():
    o = directed_cycle(6)
    assert o.directed_diameter() >= diameter(o.base)


def test_snapshot_is_independent():
    g = MultiGraph(3, [(0, 1), (1, 2), (2, 0)])
    o = MixedOrientation(g)
    o.set_direction(0, FORWARD, "t")
    snap = o.snapshot()
    o.set_direction(1, FORWARD, "t")
    assert snap.direction(1) == UNDIRECTED
    assert o.direction(1) == FORWARD
