from pathlib import Path

from strongorient import files
from strongorient.corpus import (
    build_corpus,
    filter_in_scope,
    gen_candidates,
    grid,
    pentagon_book,
    prism_chain,
    seeded_family,
    theta,
)
from strongorient.graph import diameter, find_bridges, graph_edge_girth, is_connected

CORPUS_DIR = Path(__file__).resolve().parent.parent / "corpus"


def test_gen_candidates_deterministic():
    a = gen_candidates(1, count=10)
    b = gen_candidates(1, count=10)
    assert len(a) == len(b) == 10
    for ga, gb in zip(a, b):
        assert ga.n == gb.n and ga.ends == gb.ends
    c = gen_candidates(2, count=10)
    assert any(ga.ends != gc.ends for ga, gc in zip(a, c))


def test_gen_candidates_respects_range():
    for g in gen_candidates(5, n_range=(8, 8), edge_density=0.4, count=40):
        assert g.n >= 8  # structured families may exceed; random ones pin to 8


def test_filter_in_scope():
    graphs = [grid(2, 4), pentagon_book(2), theta(4, 4, 4),
              grid(4, 4), prism_chain(2)]
    kept = filter_in_scope(graphs)
    by_id = {id(g): gs for g, gs in kept}
    assert by_id[id(graphs[0])] == 4
    assert by_id[id(graphs[1])] == 5
    assert id(graphs[2]) not in by_id  # edge girth 8
    assert by_id[id(graphs[4])] == 5
    for g, gstar in kept:
        assert is_connected(g) and not find_bridges(g)
        assert diameter(g) == 4 and graph_edge_girth(g) == gstar


def test_seeded_families():
    assert seeded_family("grid", (2, 4)).ends == grid(2, 4).ends
    th = seeded_family("theta", (4, 4, 4))
    assert th.n == 11 and th.m == 12
    assert diameter(th) == 4 and not find_bridges(th)
    pc = seeded_family("prism-chain", (2,))
    assert filter_in_scope([pc])[0][1] == 5


def test_shipped_corpus_quota_and_scope():
    for gstar in (4, 5):
        paths = sorted((CORPUS_DIR / f"gstar{gstar}").glob("*.txt"))
        assert len(paths) >= 100
        for p in paths[:10] + paths[-3:]:
            g = files.parse_graph(p.read_text())
            assert g.n <= 150
            assert diameter(g) == 4
            assert graph_edge_girth(g) == gstar
            assert not find_bridges(g)


def test_generator_reproduces_shipped_corpus():
    buckets = build_corpus(seed=1, per_class=100)
    for gstar in (4, 5):
        paths = sorted((CORPUS_DIR / f"gstar{gstar}").glob("*.txt"))
        assert len(paths) == len(buckets[gstar])
        for p, g in zip(paths, buckets[gstar]):
            assert files.format_graph(g) == p.read_text()
