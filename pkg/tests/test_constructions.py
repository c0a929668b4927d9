import random

import pytest
from hypothesis import given, settings, strategies as st

from strongorient.constructions import (
    MixedWalk,
    find_mixed_closure,
    orient_two_ways,
    orient_walk,
    rs_orient,
)
from strongorient.errors import ConflictError, InvalidRs, NotFound, PreconditionError
from strongorient.graph import MultiGraph
from strongorient.mixed import BACKWARD, FORWARD, MixedOrientation


def test_rs_triangle():
    g = MultiGraph(3, [(0, 1), (0, 2), (1, 2)])  # r=0, S={1,2}
    o = MixedOrientation(g)
    rs_orient(o, {0}, {1, 2}, "t")
    assert o.arc(0) == (0, 1)   # into side one
    assert o.arc(2) == (1, 2)   # forest edge across
    assert o.arc(1) == (2, 0)   # back out
    assert o.theta(1, {0}) <= 2 and o.theta(2, {0}) <= 2


def test_rs_four_path_sides():
    # S is a path on four vertices; sides must alternate along the forest
    edges = [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4)]
    g = MultiGraph(5, edges)
    o = MixedOrientation(g)
    v1, v2 = rs_orient(o, {0}, {1, 2, 3, 4}, "t")
    assert v1 == {1, 3} and v2 == {2, 4}
    for w in (1, 2, 3, 4):
        assert o.theta(w, {0}) <= 2


def test_rs_empty_is_noop():
    g = MultiGraph(2, [(0, 1)])
    o = MixedOrientation(g)
    rs_orient(o, {0}, set(), "t")
    assert not o.is_directed_edge(0)


def test_rs_validation():
    g = MultiGraph(3, [(0, 1), (0, 2)])
    o = MixedOrientation(g)
    with pytest.raises(InvalidRs):  # S isolated inside itself
        rs_orient(o, {0}, {1, 2}, "t")
    g2 = MultiGraph(3, [(1, 2), (1, 2)])
    with pytest.raises(InvalidRs):  # no neighbor in R
        rs_orient(MixedOrientation(g2), {0}, {1, 2}, "t")
    with pytest.raises(InvalidRs):  # overlap
        rs_orient(o, {0, 1}, {1}, "t")


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_rs_theta_bound_property(data):
    r_size = data.draw(st.integers(1, 3))
    s_size = data.draw(st.integers(2, 7))
    n = r_size + s_size
    rng = random.Random(data.draw(st.integers(0, 10 ** 6)))
    edges = []
    s_vertices = list(range(r_size, n))
    prev = s_vertices[0]
    for w in s_vertices[1:]:  # no isolated vertex inside S
        edges.append((prev, w))
        if rng.random() < 0.5:
            prev = w
    for w in s_vertices:  # every S vertex sees R
        edges.append((rng.randrange(r_size), w))
    for _ in range(rng.randrange(0, 6)):
        a, b = rng.sample(range(n), 2)
        edges.append((a, b))
    g = MultiGraph(n, edges)
    o = MixedOrientation(g)
    try:
        rs_orient(o, set(range(r_size)), set(s_vertices), "t")
    except InvalidRs:  # extra random edges cannot break the preconditions
        raise AssertionError("preconditions were satisfied by construction")
    for w in s_vertices:
        assert o.theta(w, set(range(r_size))) <= 2


def test_orient_walk_cycle_and_forced_direction():
    g = MultiGraph(3, [(0, 1), (1, 2), (2, 0)])
    o = MixedOrientation(g)
    orient_walk(o, MixedWalk([0, 1, 2], [0, 1, 2], "cycle"), "t")
    assert [o.arc(e) for e in range(3)] == [(0, 1), (1, 2), (2, 0)]

    o2 = MixedOrientation(g)
    o2.set_direction(1, BACKWARD, "pre")  # arc 2->1 forces the reverse run
    orient_walk(o2, MixedWalk([0, 1, 2], [0, 1, 2], "cycle"), "t")
    assert o2.arc(0) == (1, 0) and o2.arc(2) == (0, 2)


def test_orient_walk_conflict():
    g = MultiGraph(3, [(0, 1), (1, 2)])
    o = MixedOrientation(g)
    o.set_direction(0, FORWARD, "pre")
    o.set_direction(1, BACKWARD, "pre")  # 0->1 and 2->1 cannot be one path
    with pytest.raises(ConflictError):
        orient_walk(o, MixedWalk([0, 1, 2], [0, 1], "path"), "t")


def test_orient_two_ways():
    g = MultiGraph(4, [(0, 1), (0, 2), (0, 3)])
    o = MixedOrientation(g)
    orient_two_ways(o, 0, {1, 2, 3}, "t")
    assert o.arc(0) == (0, 1)
    assert o.arc(1) == (2, 0) and o.arc(2) == (3, 0)

    g2 = MultiGraph(2, [(0, 1), (0, 1)])
    o2 = MixedOrientation(g2)
    orient_two_ways(o2, 0, {1}, "t")
    assert o2.is_strong()

    with pytest.raises(PreconditionError):
        orient_two_ways(MixedOrientation(MultiGraph(2, [(0, 1)])), 0, {1}, "t")


def test_find_mixed_closure_cycle():
    g = MultiGraph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    o = MixedOrientation(g)
    walk = find_mixed_closure(o, [0, 1], [0], [range(5), range(5), range(5)],
                              close_to=0)
    assert walk.kind == "cycle"
    assert walk.vertices == [0, 1, 2, 3, 4]


def test_find_mixed_closure_respects_arcs():
    g = MultiGraph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (1, 3)])
    o = MixedOrientation(g)
    o.set_direction(4, FORWARD, "pre")  # 1 -> 3 blocks the short closure
    walk = find_mixed_closure(o, [0, 1], [0], [range(4), range(4)], close_to=0)
    assert walk.vertices == [0, 1, 2, 3]
    orient_walk(o, walk, "t")
    assert o.is_strong()


def test_find_mixed_closure_not_found():
    g = MultiGraph(3, [(0, 1), (1, 2)])
    o = MixedOrientation(g)
    with pytest.raises(NotFound):
        find_mixed_closure(o, [0, 1], [0], [range(3)], close_to=0)


def test_find_mixed_closure_accept_filter():
    g = MultiGraph(3, [(0, 1), (1, 2), (2, 0)])
    o = MixedOrientation(g)
    with pytest.raises(NotFound):
        find_mixed_closure(o, [0, 1], [0], [range(3)], close_to=0,
                           accept=lambda vs, dirs: False)
