import pytest

from strongorient.corpus import grid, pentagon_book
from strongorient.errors import PreconditionError
from strongorient.graph import MultiGraph, bfs_distances, edge_girth, graph_edge_girth
from strongorient.partition import (
    BaseEdge,
    FineLabels,
    coarse_refine,
    layer_partition,
    select_base_edge,
    static_refine,
)
from strongorient.pipeline import build_labels


def cycle(n):
    return MultiGraph(n, [(i, (i + 1) % n) for i in range(n)])


def test_select_base_edge_grid():
    g = grid(2, 4)
    base = select_base_edge(g)
    # brute force: lowest edge id whose shortest cycle length equals the max
    gstar = graph_edge_girth(g)
    expect = min(e for e in range(g.m) if edge_girth(g, e) == gstar)
    assert base.e == expect
    assert base.gstar == gstar == 4
    assert base.u == min(g.ends[expect]) and base.v == max(g.ends[expect])


def test_select_base_edge_rejects_out_of_scope():
    with pytest.raises(PreconditionError, match="girth"):
        select_base_edge(cycle(9))
    with pytest.raises(PreconditionError, match="bridge"):
        select_base_edge(MultiGraph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5),
                                        (5, 3), (2, 3)]))
    with pytest.raises(PreconditionError, match="diameter"):
        select_base_edge(MultiGraph(4, [(0, 1), (1, 2), (2, 3), (3, 0)]))
    with pytest.raises(PreconditionError, match="connected"):
        select_base_edge(MultiGraph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]))


def test_layer_partition_cycle9():
    g = cycle(9)
    layers = layer_partition(g, BaseEdge(0, 1, 0, 9))
    assert layers.assign[5] == (4, 4)
    assert layers.assign[8] == (1, 2)
    assert layers.assign[2] == (2, 1)
    assert not layers.members(1, 1)


def test_layer_partition_matches_double_bfs():
    g = grid(2, 4)
    base = select_base_edge(g)
    layers = layer_partition(g, base)
    du = bfs_distances(g, base.u)
    dv = bfs_distances(g, base.v)
    for w in range(g.n):
        assert layers.assign[w] == (du[w], dv[w])
    assert not layers.members(1, 1)


def test_coarse_cells_partition_layers():
    g = pentagon_book(3)
    base = select_base_edge(g)
    labels = coarse_refine(g, FineLabels(g, base, layer_partition(g, base)))
    pairs = [("A'", "A", "S12"), ("B'", "B", "S21"), ("I'", "I", "S23"),
             ("J'", "J", "S32"), ("X'", "X", "S33"), ("K'", "K", "S34"),
             ("L'", "L", "S43"), ("M'", "M", "S44")]
    for primed, plain, layer in pairs:
        assert labels.cell(primed) | labels.cell(plain) == labels.cell(layer)
        assert not labels.cell(primed) & labels.cell(plain)


def test_single_link_middle_vertices():
    # a middle vertex with one link into the near cells, versus one with two
    g = grid(2, 4)
    base, labels = build_labels(g, select_base_edge(g))
    near = labels.union("S22", "I", "J", "K", "L")
    for w in labels.cell("X'"):
        assert sum(1 for _, x in g.incident(w) if x in near) == 1
    for w in labels.cell("X"):
        assert sum(1 for _, x in g.incident(w) if x in near) >= 2


def test_symmetry_guard():
    for g in (grid(2, 4), pentagon_book(2), pentagon_book(4)):
        base, labels = build_labels(g, select_base_edge(g))
        assert len(labels.cell("K'")) >= len(labels.cell("L'"))


def test_dump_format():
    g = grid(2, 4)
    base, labels = build_labels(g, select_base_edge(g))
    lines = labels.dump().strip().splitlines()
    assert len(lines) == g.n
    for line in lines:
        vid, path = line.split("\t")
        assert 0 <= int(vid) < g.n
        assert path
    assert any(line.split("\t")[1] == "u" for line in lines)


def test_a_vertex_next_to_center_is_unprimed():
    # a base-adjacent vertex with a neighbor two steps from both ends cannot
    # keep all its neighbors beside the base end
    g = pentagon_book(2)
    base, labels = build_labels(g, select_base_edge(g))
    s22 = labels.cell("S22")
    for w in labels.cell("S12"):
        if g.neighbor_set(w) & s22:
            assert w in labels.cell("A")
