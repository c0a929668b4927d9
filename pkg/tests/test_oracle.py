import math

import pytest

from strongorient.corpus import grid, pentagon_book
from strongorient.errors import InternalError, TooLarge
from strongorient.graph import MultiGraph, diameter
from strongorient.oracle import min_oriented_diameter, spot_check_bound


def cycle(n):
    return MultiGraph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return MultiGraph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a, b):
    return MultiGraph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


# exact optima pinned by enumeration before the main build
PINNED = {
    "C4": (cycle(4), 3),
    "C5": (cycle(5), 4),
    "C7": (cycle(7), 6),
    "K4": (complete(4), 3),
    "K23": (complete_bipartite(2, 3), 4),
    "K33": (complete_bipartite(3, 3), 3),
    "P2xP4": (grid(2, 4), 5),
    "book2": (pentagon_book(2), 7),
}


@pytest.mark.parametrize("name", sorted(set(PINNED) - {"book2"}))
def test_pinned_minima(name):
    g, expected = PINNED[name]
    result = min_oriented_diameter(g)
    assert result.min_diameter == expected
    assert result.orientations_checked == 2 ** g.m
    witness = result.witness_orientation(g)
    assert witness.is_strong()
    assert witness.directed_diameter() == expected


def test_book2_minimum():
    g = pentagon_book(2)
    result = min_oriented_diameter(g)
    assert result.min_diameter == PINNED["book2"][1]


def test_complete_bipartite_bound():
    # every complete bipartite graph admits an orientation of diameter <= 4
    assert min_oriented_diameter(complete_bipartite(2, 3)).min_diameter <= 4
    assert min_oriented_diameter(complete_bipartite(3, 3)).min_diameter <= 4


def test_bridged_graph_has_no_strong_orientation():
    g = MultiGraph(3, [(0, 1), (1, 2)])
    assert min_oriented_diameter(g).min_diameter is math.inf


def test_too_large_cap():
    g = complete(7)  # 21 edges
    with pytest.raises(TooLarge):
        min_oriented_diameter(g, max_edges=20)


def test_split_invariance():
    g = grid(2, 4)
    base = min_oriented_diameter(g)
    for splits in (2, 3, 7):
        got = min_oriented_diameter(g, splits=splits)
        assert got.min_diameter == base.min_diameter
        assert got.witness == base.witness
        assert got.orientations_checked == base.orientations_checked


def test_reversal_symmetry():
    # reversing every arc of a strong orientation preserves strongness and
    # diameter, so the minimum over half the space with reversal closure
    # equals the minimum over the full space
    g = cycle(5)
    full = min_oriented_diameter(g)
    half_min = math.inf
    from strongorient.mixed import BACKWARD, FORWARD, MixedOrientation

    for mask in range(2 ** (g.m - 1)):  # fix the top bit to Forward
        for flipped in (mask, mask ^ (2 ** g.m - 1)):
            o = MixedOrientation(g)
            for e in range(g.m):
                o.set_direction(e, BACKWARD if flipped >> e & 1 else FORWARD, "t")
            d = o.directed_diameter()
            if d < half_min:
                half_min = d
    assert half_min == full.min_diameter


def test_spot_check():
    g = cycle(5)
    result = min_oriented_diameter(g)
    assert spot_check_bound(g, 9, result)
    assert not spot_check_bound(g, 3, result)


def test_spot_check_rejects_impossible_oracle():
    g = grid(2, 4)
    result = min_oriented_diameter(g)
    result.min_diameter = diameter(g) - 1  # corrupt it
    with pytest.raises(InternalError):
        spot_check_bound(g, 10, result)
