"""Deterministic generation of in-scope test graphs.

Uniform random graphs almost never land on diameter 4 with a small edge
girth, so generation is biased through structured families (layered blowups,
pentagon books, short pentagon chains, decorated grids) plus randomized
decorations, and filter_in_scope keeps exactly the graphs the pipeline
accepts.  Everything is driven by a seeded RNG: the same seed always yields
the same graphs, which is what freezes the shipped corpus.
"""

from __future__ import annotations

import random
from typing import Iterable

from .graph import MultiGraph, diameter, find_bridges, graph_edge_girth, is_connected


def grid(rows: int, cols: int) -> MultiGraph:
    def idx(i: int, j: int) -> int:
        return i * cols + j

    edges = []
    for i in range(rows):
        for j in range(cols):
            if j + 1 < cols:
                edges.append((idx(i, j), idx(i, j + 1)))
            if i + 1 < rows:
                edges.append((idx(i, j), idx(i + 1, j)))
    return MultiGraph(rows * cols, edges)


def theta(l1: int, l2: int, l3: int) -> MultiGraph:
    """Two hubs joined by three internally disjoint paths of the given lengths."""
    edges = []
    n = 2
    for length in (l1, l2, l3):
        prev = 0
        for _ in range(length - 1):
            edges.append((prev, n))
            prev = n
            n += 1
        edges.append((prev, 1))
    return MultiGraph(n, edges)


def prism_chain(k: int) -> MultiGraph:
    """k pentagons, consecutive ones sharing a single vertex."""
    edges = []
    n = 0
    shared = 0
    for i in range(k):
        if i == 0:
            ring = [n, n + 1, n + 2, n + 3, n + 4]
            n += 5
        else:
            ring = [shared, n, n + 1, n + 2, n + 3]
            n += 4
        for a, b in zip(ring, ring[1:] + ring[:1]):
            edges.append((a, b))
        shared = ring[2]
    return MultiGraph(n, edges)


def pentagon_book(k: int) -> MultiGraph:
    """Hub edge plus k pentagons through it; every edge sits on a 5-cycle."""
    edges = [(0, 1)]
    n = 2
    for _ in range(k):
        a, s, b = n, n + 1, n + 2
        n += 3
        edges.extend([(0, a), (a, s), (s, b), (b, 1)])
    return MultiGraph(n, edges)


def seeded_family(kind: str, params: tuple[int, ...]) -> MultiGraph:
    if kind == "grid":
        return grid(*params)
    if kind == "theta":
        return theta(*params)
    if kind == "prism-chain":
        return prism_chain(*params)
    raise ValueError(f"unknown family kind {kind!r}")


def filter_in_scope(graphs: Iterable[MultiGraph]) -> list[tuple[MultiGraph, int]]:
    """Keep the connected, bridgeless, diameter-4 graphs with edge girth 4 or 5."""
    out = []
    for g in graphs:
        if g.m == 0 or not is_connected(g) or find_bridges(g):
            continue
        if diameter(g) != 4:
            continue
        gstar = graph_edge_girth(g)
        if gstar in (4, 5):
            out.append((g, int(gstar)))
    return out


# ---------------------------------------------------------------------------
# randomized families
# ---------------------------------------------------------------------------

def _shuffled(rng: random.Random, n: int, edges: list[tuple[int, int]]) -> MultiGraph:
    perm = list(range(n))
    rng.shuffle(perm)
    relabeled = [(perm[a], perm[b]) for a, b in edges]
    rng.shuffle(relabeled)
    return MultiGraph(n, relabeled)


def _decorated_book(rng: random.Random) -> MultiGraph:
    k = rng.randint(2, 11)
    edges = [(0, 1)]
    n = 2
    a_ids, s_ids, b_ids = [], [], []
    for _ in range(k):
        a, s, b = n, n + 1, n + 2
        n += 3
        a_ids.append(a)
        s_ids.append(s)
        b_ids.append(b)
        edges.extend([(0, a), (a, s), (s, b), (b, 1)])
    for ids in (s_ids, a_ids, b_ids):
        if len(ids) >= 2 and rng.random() < 0.45:
            for _ in range(rng.randint(1, max(1, k // 2))):
                x, y = rng.sample(ids, 2)
                edges.append((x, y))
    if rng.random() < 0.3:  # second spine inside one pentagon
        i = rng.randrange(k)
        edges.extend([(a_ids[i], n), (n, b_ids[i])])
        n += 1
    if rng.random() < 0.25:  # twin spine vertex, parallel pair allowed
        i = rng.randrange(k)
        edges.append((a_ids[i], s_ids[i]))
    return _shuffled(rng, n, edges)


def _decorated_grid(rng: random.Random) -> MultiGraph:
    g = grid(2, 4)
    edges = list(g.ends)
    n = g.n
    for _ in range(rng.randint(0, 3)):
        edges.append(edges[rng.randrange(len(edges))])  # parallel copy
    if rng.random() < 0.4:  # hang a doubled pendant off one vertex
        x = rng.randrange(n)
        edges.extend([(x, n), (x, n)])
        n += 1
    return _shuffled(rng, n, edges)


def _layered_blowup(rng: random.Random, want_girth5: bool, scale: int) -> MultiGraph:
    base = 1 + scale
    na = rng.randint(1, 3)
    nb = rng.randint(1, 3)
    w2 = rng.randint(2, 3 + base)
    w3 = rng.randint(2, 3 + base)
    w4 = rng.randint(2, 3 + base)

    n = 2
    def fresh(count: int) -> list[int]:
        nonlocal n
        out = list(range(n, n + count))
        n += count
        return out

    A1, B1 = fresh(na), fresh(nb)
    W2, W3, W4 = fresh(w2), fresh(w3), fresh(w4)
    edges = [(0, 1)]
    edges += [(0, a) for a in A1] + [(1, b) for b in B1]
    edges += [(a, w) for a in A1 for w in W2]
    edges += [(b, w) for b in B1 for w in W2]
    edges += [(x, y) for x in W2 for y in W3]
    edges += [(x, y) for x in W3 for y in W4]
    if not want_girth5:
        edges.append((rng.choice(A1), rng.choice(B1)))

    # optional side tails reaching the deepest layers next to the base edge
    depth_a = rng.choice((0, 0, 1, 1, 2))
    depth_b = rng.choice((0, 1, 2)) if depth_a != 1 else rng.choice((0, 1))
    for depth, anchor_layer in ((depth_a, A1), (depth_b, B1)):
        if depth == 0:
            continue
        t1 = fresh(rng.randint(1, 2))
        anchor = rng.choice(anchor_layer)
        for t in t1:
            edges.append((t, anchor))
            edges.append((t, rng.choice(anchor_layer)))
        if depth == 2:
            t2 = fresh(rng.randint(1, 2))
            hub = rng.choice(t1)
            for t in t2:
                edges.append((t, hub))
                edges.append((t, rng.choice(t1)))
                edges.append((t, rng.choice(W4)))
                edges.append((t, rng.choice(W4)))

    # sparse random deletions of the complete joins keep some variety
    keep_prob = 1.0 - rng.uniform(0.0, 0.2)
    kept = []
    degree = [0] * n
    for a, b in edges:
        degree[a] += 1
        degree[b] += 1
    for a, b in edges:
        if rng.random() > keep_prob and degree[a] > 2 and degree[b] > 2:
            degree[a] -= 1
            degree[b] -= 1
            continue
        kept.append((a, b))
    if rng.random() < 0.3:
        kept.append(kept[rng.randrange(len(kept))])  # parallel edge
    if rng.random() < 0.4 and len(W3) >= 2:
        kept.append(tuple(rng.sample(W3, 2)))
    return _shuffled(rng, n, kept)


def _deep_prime(rng: random.Random) -> MultiGraph:
    """Backbone plus deep side tails whose outer vertices only see their own
    layer, which populates the far refinement cells on both sides."""
    n = 2
    edges = [(0, 1)]

    def fresh(count: int) -> list[int]:
        nonlocal n
        out = list(range(n, n + count))
        n += count
        return out

    def join(xs, ys, at_least=1):
        for x in xs:
            picks = rng.sample(ys, min(len(ys), max(at_least, rng.randint(1, 2))))
            for y in picks:
                edges.append((x, y))

    A1 = fresh(rng.randint(1, 2))
    B1 = fresh(rng.randint(1, 2))
    W2 = fresh(rng.randint(2, 4))
    W3 = fresh(rng.randint(2, 4))
    W4 = fresh(rng.randint(2, 4))
    edges += [(0, a) for a in A1] + [(1, b) for b in B1]
    edges += [(a, w) for a in A1 for w in W2]
    edges += [(b, w) for b in B1 for w in W2]
    edges += [(x, y) for x in W2 for y in W3]
    edges += [(x, y) for x in W3 for y in W4]
    if rng.random() < 0.5:
        edges.append((rng.choice(A1), rng.choice(B1)))

    # side corridors: near vertices touch the center, far ones do not
    i_near = fresh(rng.randint(1, 2))
    join(i_near, A1)
    join(i_near, W2)
    i_far = fresh(rng.randint(1, 3))
    join(i_far, A1, at_least=2)
    if rng.random() < 0.6 and len(i_far) >= 2:
        edges.append(tuple(rng.sample(i_far, 2)))
    j_near = fresh(rng.randint(1, 2))
    join(j_near, B1)
    join(j_near, W2)
    j_far = fresh(rng.randint(1, 3))
    join(j_far, B1, at_least=2)

    k_mid = fresh(rng.randint(1, 2))
    join(k_mid, W4, at_least=2)
    join(k_mid, i_far + i_near)
    l_mid = fresh(rng.randint(1, 2))
    join(l_mid, W4, at_least=2)
    join(l_mid, j_far + j_near)

    kp = fresh(rng.randint(1, 3))
    join(kp, i_far, at_least=2)
    if len(kp) >= 2 and rng.random() < 0.6:
        edges.append(tuple(rng.sample(kp, 2)))
    if rng.random() < 0.4:
        join([rng.choice(kp)], k_mid)
    lp = fresh(rng.randint(1, 3))
    join(lp, j_far, at_least=2)
    if len(lp) >= 2 and rng.random() < 0.6:
        edges.append(tuple(rng.sample(lp, 2)))
    if rng.random() < 0.4:
        join([rng.choice(lp)], l_mid)

    if rng.random() < 0.5:  # single-link middle vertices, sometimes clustered
        x1 = fresh(1)[0]
        edges.append((x1, rng.choice(W2)))
        if rng.random() < 0.5:
            x2 = fresh(1)[0]
            edges.append((x2, rng.choice(W2)))
            edges.append((x1, x2))
        else:
            mp = fresh(1)[0]
            edges.append((mp, x1))
            edges.append((mp, rng.choice(W4)))
            if rng.random() < 0.5:
                mp2 = fresh(1)[0]
                edges.append((mp2, mp))
                edges.append((mp2, rng.choice(W3)))
    if rng.random() < 0.4:  # hub-only pendants next to the base edge
        side, hub = rng.choice(((0, A1), (1, B1)))
        p1 = fresh(1)[0]
        edges.append((p1, side))
        if rng.random() < 0.5:
            edges.append((p1, side))
        else:
            p2 = fresh(1)[0]
            edges.extend([(p2, side), (p1, p2)])
        if rng.random() < 0.5:
            edges.append((p1, rng.choice(hub)))
    return _shuffled(rng, n, edges)


def _menagerie(rng: random.Random) -> MultiGraph:
    """Backbone with randomized side features chosen to reach the refinement
    cells that plain random graphs essentially never populate: deep prime
    clusters at both base ends, ladder vertices feeding the late in-family
    ranks, single-link middle vertices, and hub-only pendants."""
    n = 2
    edges = [(0, 1)]

    def fresh(k: int = 1) -> list[int]:
        nonlocal n
        out = list(range(n, n + k))
        n += k
        return out

    def link(x, ys):
        for y in ys:
            edges.append((x, y))

    A1 = fresh(rng.randint(1, 2))
    B1 = fresh(rng.randint(1, 2))
    W2 = fresh(rng.randint(2, 3))
    W3 = fresh(rng.randint(2, 3))
    W4 = fresh(rng.randint(2, 3))
    for a in A1:
        link(a, [0] + W2)
    for b in B1:
        link(b, [1] + W2)
    for x in W2:
        link(x, W3)
    for x in W3:
        link(x, W4)
    if rng.random() < 0.5:
        edges.append((rng.choice(A1), rng.choice(B1)))
    bridge = rng.choice(W3)

    def side(hub: int, H: list[int]) -> None:
        # near/far corridor anchors
        n1 = fresh()[0]
        link(n1, [rng.choice(H), rng.choice(W2)])
        far: list[int] = []
        for _ in range(rng.randint(1, 2)):
            f = fresh()[0]
            link(f, [rng.choice(H), n1])
            if rng.random() < 0.5:
                edges.append((f, bridge))
            far.append(f)
        # deep mid vertices; one flavor touches the middle layer, one does not
        mids: list[int] = []
        if rng.random() < 0.7:
            k1 = fresh()[0]
            link(k1, [rng.choice(W3), rng.choice(W4), rng.choice(far + [n1])])
            mids.append(k1)
            if rng.random() < 0.5:
                k2 = fresh()[0]
                link(k2, [k1, rng.choice(W4)])
                if rng.random() < 0.5:
                    edges.append((k2, rng.choice(far)))
                mids.append(k2)
        if rng.random() < 0.5:
            k3 = fresh()[0]
            link(k3, [rng.choice(W4), rng.choice(W4), rng.choice(far + [n1])])
            mids.append(k3)
        # prime cluster hanging off the corridor
        if rng.random() < 0.8:
            prime = fresh(rng.randint(1, 3))
            for p in prime:
                link(p, rng.sample(far, min(2, len(far))) or [far[0]])
                if len(far) < 2:
                    edges.append((p, far[0]))
            for _ in range(rng.randint(0, len(prime) - 1)):
                edges.append(tuple(rng.sample(prime, 2)))
            if mids and rng.random() < 0.5:
                edges.append((rng.choice(prime), rng.choice(mids)))
            if rng.random() < 0.4:  # sixth-rank corridor vertex and its pendant
                i6 = fresh()[0]
                link(i6, [rng.choice(H), rng.choice(prime)])
                if rng.random() < 0.5:
                    a9 = fresh()[0]
                    link(a9, [hub, i6])
        # ladder vertices feeding the late ranks
        if mids and rng.random() < 0.6:
            lad = fresh()[0]
            link(lad, [rng.choice(H), rng.choice(mids)])
            if rng.random() < 0.6:
                pend = fresh()[0]
                link(pend, [hub, lad])
        # hub-only pendants
        if rng.random() < 0.5:
            p1 = fresh()[0]
            if rng.random() < 0.5:
                link(p1, [hub, hub])
            else:
                p2 = fresh()[0]
                link(p1, [hub, p2])
                link(p2, [hub] + ([p1] if rng.random() < 0.3 else [rng.choice(H)]))
        # residual-layer blobs pinned to the hub layer
        if rng.random() < 0.5:
            q1 = fresh()[0]
            link(q1, [rng.choice(H), rng.choice(H + far)])
            if rng.random() < 0.5:
                q2 = fresh()[0]
                link(q2, [q1, rng.choice(H)])

    side(0, A1)
    side(1, B1)

    if rng.random() < 0.5:  # single-link middle vertices, clustered or chained
        x1 = fresh()[0]
        link(x1, [rng.choice(W2)])
        if rng.random() < 0.5:
            x2 = fresh()[0]
            link(x2, [rng.choice(W2), x1])
        else:
            mp = fresh()[0]
            link(mp, [x1, rng.choice(W4)])
            if rng.random() < 0.5:
                mp2 = fresh()[0]
                link(mp2, [mp, rng.choice(W3)])
    if rng.random() < 0.4:  # single-link deep vertices
        m1 = fresh()[0]
        link(m1, [rng.choice(W3)])
        if rng.random() < 0.5:
            m2 = fresh()[0]
            link(m2, [rng.choice(W3), m1])
        else:
            link(m1, [rng.choice(W4)])
    if rng.random() < 0.3:
        edges.append(edges[rng.randrange(len(edges))])  # parallel copy
    return _shuffled(rng, n, edges)


class _Scaffold:
    """Shared backbone for the themed builders: base edge, two hub layers,
    three center layers, one near/far anchor pair per side, and a handshake
    edge between the two near anchors so deep features on opposite sides can
    still reach each other within the diameter budget."""

    def __init__(self, rng: random.Random, cross: bool,
                 w4_size: int | None = None, far: bool = True):
        self.rng = rng
        self.n = 2
        self.edges: list[tuple[int, int]] = [(0, 1)]
        self.A1 = self.fresh(rng.randint(1, 2))
        self.B1 = self.fresh(rng.randint(1, 2))
        self.W2 = self.fresh(rng.randint(2, 3))
        self.W3 = self.fresh(rng.randint(2, 3))
        self.W4 = self.fresh(w4_size if w4_size is not None else rng.randint(2, 3))
        for a in self.A1:
            self.link(a, [0] + self.W2)
        for b in self.B1:
            self.link(b, [1] + self.W2)
        for x in self.W2:
            self.link(x, self.W3)
        for x in self.W3:
            self.link(x, self.W4)
        if cross:
            self.edges.append((rng.choice(self.A1), rng.choice(self.B1)))
        self.bridge = rng.choice(self.W3)
        self.deep = self.W4[0]
        self.w2u = rng.choice(self.W2)
        self.w2v = rng.choice(self.W2)
        self.n1u = self.one(self.A1[0], self.w2u)
        self.n1v = self.one(self.B1[0], self.w2v)
        self.edges.append((self.n1u, self.n1v))
        if far:
            self.fu = self.one(self.A1[0], self.n1u, self.bridge)
            self.fv = self.one(self.B1[0], self.n1v, self.bridge)
        else:
            self.fu = self.n1u
            self.fv = self.n1v

    def fresh(self, k: int = 1) -> list[int]:
        out = list(range(self.n, self.n + k))
        self.n += k
        return out

    def one(self, *links: int) -> int:
        v = self.fresh(1)[0]
        self.link(v, links)
        return v

    def link(self, x: int, ys) -> None:
        for y in ys:
            self.edges.append((x, y))

    def prime_cluster(self, hooks: list[int], size: int) -> list[int]:
        out = self.fresh(size)
        for p in out:
            self.link(p, self.rng.sample(hooks, min(2, len(hooks))))
            if len(hooks) < 2:
                self.link(p, [hooks[0]])
        for i in range(len(out) - 1):
            if self.rng.random() < 0.6:
                self.edges.append((out[i], out[i + 1]))
        return out

    def build(self) -> MultiGraph:
        return _shuffled(self.rng, self.n, self.edges)


def _theme_ranks(rng: random.Random) -> MultiGraph:
    """Feeds the late in-family ranks on both sides plus their pendants."""
    s = _Scaffold(rng, cross=rng.random() < 0.5, w4_size=1)
    a1, b1 = s.A1[0], s.B1[0]
    k1 = s.one(s.bridge, s.deep, s.fu, s.n1u)
    l1 = s.one(k1, s.deep, s.fv, s.n1v)
    k2 = s.one(k1, s.deep, s.n1u)
    l2 = s.one(s.deep, s.fv, s.n1v)
    j4 = s.one(b1, l1)
    j5 = s.one(b1, l2)
    i4 = s.one(a1, k1)
    i5 = s.one(a1, k2)
    s.one(1, j4, b1)
    s.one(1, j5, b1)
    s.one(0, i4, a1)
    s.one(0, i5, a1)
    if rng.random() < 0.7:
        fb3 = s.one(b1, s.n1v, l2)                      # the deep hook keeps it unprimed
        s.one(1, fb3, b1)
        fa3 = s.one(a1, s.n1u, k2)
        s.one(0, fa3, a1)
    if rng.random() < 0.5:
        kp = s.prime_cluster([s.fu, s.n1u], rng.randint(1, 2))
        lp = s.prime_cluster([s.fv, s.n1v], 1)
        j6 = s.one(b1, lp[0])
        s.one(1, j6, b1)
        i6 = s.one(a1, kp[0])
        s.one(0, i6, a1)
    return s.build()


def _theme_jpblobs(rng: random.Random) -> MultiGraph:
    """Side-layer blobs split by which pendant ranks they touch."""
    s = _Scaffold(rng, cross=rng.random() < 0.5, w4_size=1, far=False)
    b1 = s.B1[0]
    l2 = s.one(s.deep, s.fv, s.n1v)
    j5 = s.one(b1, l2)
    b8 = s.one(1, j5, b1)
    b8b = s.one(1, j5, b1)
    if rng.random() < 0.7:
        jp2 = s.one(s.n1v, b1)
        jp31 = s.one(j5, b1)
        jp32 = s.one(j5, rng.choice([b8, b8b]), jp2)
    if rng.random() < 0.7:
        jp51 = s.one(b1)
        jp61 = s.one(b8, jp51)
        jp62 = s.one(b8b, jp61)
        if rng.random() < 0.6:
            p1, p2 = s.fresh(2)
            s.link(p1, [b8, p2])
            s.link(p2, [b8b, p1])
    if rng.random() < 0.5:
        jp41 = s.one(b1, b1)
        jp42 = s.one(b8, b8b)
    return s.build()


def _theme_iprime_chains(rng: random.Random) -> MultiGraph:
    """Seventh and eighth rank side chains next to the near base end."""
    s = _Scaffold(rng, cross=rng.random() < 0.5, w4_size=1)
    a1 = s.A1[0]
    k1 = s.one(s.bridge, s.deep, s.fu, s.n1u)
    k2 = s.one(k1, s.deep, s.n1u)
    i4 = s.one(a1, k1)
    i5 = s.one(a1, k2)
    a7 = s.one(0, i4, a1)
    a8 = s.one(0, i5, a1)
    ip71 = s.one(a1)
    ip81 = s.one(a7, ip71)
    if rng.random() < 0.6:
        ip82 = s.one(a8, ip81)
    if rng.random() < 0.5:
        ip72 = s.one(a1, ip71)
    if rng.random() < 0.5:
        p1, p2 = s.fresh(2)
        s.link(p1, [a7, p2])
        s.link(p2, [a8, p1])
    if rng.random() < 0.4:
        ip5 = s.one(a1, s.one(a1, k2))
        s.link(ip5, [a7] if rng.random() < 0.5 else [a8])
    return s.build()


def _theme_lprime(rng: random.Random) -> MultiGraph:
    """Populates the smaller prime side's taxonomy next to the far base end."""
    s = _Scaffold(rng, cross=rng.random() < 0.4, w4_size=1)
    b1 = s.B1[0]
    fu2 = s.one(s.A1[0], s.n1u, s.bridge)
    kp = s.prime_cluster([s.fu, fu2, s.n1u], rng.randint(5, 6))
    s.link(kp[0], [s.n1u])
    k_mid = s.one(s.bridge, s.deep, s.fu, s.n1u)
    l_tap = s.one(s.deep, s.fv, s.n1v)                  # second-rank deep tap
    variant = rng.randrange(4)
    if variant == 0:
        l1c = s.one(k_mid, s.fv, s.n1v)
        lp11 = s.one(l1c, s.fv)
        lp12 = s.one(s.n1v, l_tap)
        lp13 = s.one(l_tap, s.fv)
        l3c = s.one(s.n1v, lp11, l_tap, s.bridge)
    elif variant == 1:
        others = [x for x in s.W3 if x != s.bridge] or s.W3
        l4 = s.one(s.bridge, rng.choice(others), s.fv)
        lp2 = s.one(l4, s.fv)
        if rng.random() < 0.5:
            s.link(lp2, [s.one(s.fv, s.n1v)])
    elif variant == 2:
        jf1 = s.one(b1, s.fu, s.n1v)                    # first-rank far feeder
        lp4 = s.one(jf1, s.fv)
        lp5 = s.one(lp4, s.fv)
        if rng.random() < 0.5:
            lp42 = s.one(jf1, lp4)                      # hangs off the bridging vertex
        else:
            a_pair = s.fresh(2)
            s.link(a_pair[0], [jf1, a_pair[1]])
            s.link(a_pair[1], [jf1])                    # adjacent pair, no deep hook
    else:
        jf_a = s.one(b1, s.n1v, l_tap)                  # third-rank feeders
        jf_b = s.one(b1, s.n1v, l_tap)
        j6 = s.one(b1, s.prime_cluster([s.fv, s.n1v], 1)[0])
        lp52 = s.one(jf_a, j6)
        lp53 = s.one(jf_b, lp52)
        pair = s.fresh(2)
        s.link(pair[0], [jf_a, pair[1]])
        s.link(pair[1], [jf_b, pair[0]])
    return s.build()


def _theme_staged(rng: random.Random) -> MultiGraph:
    """Chains that only resolve at the orientation checkpoints: hub-layer
    vertices woken by the pendant sweeps, and sixth-rank corridor machinery."""
    s = _Scaffold(rng, cross=False, w4_size=1)
    a1, b1 = s.A1[0], s.B1[0]
    kp = s.prime_cluster([s.fu, s.n1u], rng.randint(1, 2))
    jp = s.one(s.n1v, b1)                               # primed side blob
    b10 = s.one(1, jp, b1)                              # rank-10 hub vertex
    bp1 = s.one(1, b10, b1)                             # woken through the sweep
    if rng.random() < 0.6:
        pair = s.fresh(2)
        s.link(pair[0], [1, pair[1], b1])
        s.link(pair[1], [1, b1])
    i61 = s.one(a1, kp[0])
    a4 = s.one(0, s.n1u, a1)                            # fourth-rank hub feeder
    i62 = s.one(a4, kp[0])
    s.edges.append((i61, i62))
    ip2 = s.one(i61, a1)
    a92 = s.one(0, ip2, a1)
    if rng.random() < 0.6:
        i61b = s.one(a1, kp[0])                         # single-hub corridor vertex
        far_i = s.one(kp[0], a4)                        # woken through its detour
    if rng.random() < 0.7:
        quiet = s.one(a4, kp[0])                        # untouched sixth-rank vertex
        a94 = s.one(0, quiet, a1)
        ap1 = s.one(0, a94, a1)
    if rng.random() < 0.5:
        pair = s.fresh(2)
        s.link(pair[0], [0, pair[1], a1])
        s.link(pair[1], [0, a1])
    return s.build()


def _theme_deep_iprime(rng: random.Random) -> MultiGraph:
    """Sixth-rank corridors and their side blobs."""
    s = _Scaffold(rng, cross=rng.random() < 0.4, w4_size=1)
    a1 = s.A1[0]
    kp = s.prime_cluster([s.fu, s.n1u], rng.randint(1, 3))
    a4 = s.one(0, s.n1u)
    i62 = s.one(a4, rng.choice(kp))
    if rng.random() < 0.6:
        s.link(i62, [s.fu])                             # feeder from the early ranks
    ip5 = s.one(i62, a4)
    k2 = s.one(s.one(s.bridge, s.deep, s.fu, s.n1u), s.deep, s.n1u)
    i5v = s.one(a1, k2)
    a8 = s.one(0, i5v, a1)
    ip52 = s.one(i62, a8)
    return s.build()


def _theme_single_link(rng: random.Random) -> MultiGraph:
    """Single-link middle and deep vertices, clustered or chained."""
    s = _Scaffold(rng, cross=False, w4_size=rng.randint(1, 2))
    kp = s.prime_cluster([s.fu, s.n1u], rng.randint(1, 2)) if rng.random() < 0.5 else []
    x1 = s.one(s.w2u)
    variant = rng.randrange(3)
    if variant == 0:
        mp = s.one(x1, s.deep)
        if rng.random() < 0.5:
            s.one(mp, s.bridge)                         # second single-link deep
    elif variant == 1:
        x2 = s.one(s.w2u if rng.random() < 0.5 else s.w2v)
        s.edges.append((x1, x2))
    else:
        mp = s.one(x1, s.deep)
        mp2 = s.one(mp, s.bridge)
    return s.build()


def _random_graph(rng: random.Random, n_range: tuple[int, int], density: float) -> MultiGraph:
    n = rng.randint(*n_range)
    edges = []
    for a in range(n):
        for b in range(a + 1, n):
            if rng.random() < density:
                edges.append((a, b))
    perim = list(range(n))
    rng.shuffle(perim)
    for a, b in zip(perim, perim[1:] + perim[:1]):  # cheap 2-edge-connected backbone
        edges.append((a, b))
    return _shuffled(rng, n, edges)


def gen_candidates(seed: int, n_range: tuple[int, int] = (8, 12),
                   edge_density: float = 0.3, count: int = 50) -> list[MultiGraph]:
    """Deterministic mixed stream of candidate graphs (not yet filtered)."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        kind = rng.random()
        if kind < 0.1:
            out.append(_decorated_book(rng))
        elif kind < 0.28:
            scale = rng.choice((0, 0, 1, 2, 6, 10))
            out.append(_layered_blowup(rng, rng.random() < 0.5, scale))
        elif kind < 0.38:
            out.append(_deep_prime(rng))
        elif kind < 0.52:
            out.append(_menagerie(rng))
        elif kind < 0.6:
            out.append(_theme_ranks(rng))
        elif kind < 0.66:
            out.append(_theme_jpblobs(rng))
        elif kind < 0.72:
            out.append(_theme_iprime_chains(rng))
        elif kind < 0.8:
            out.append(_theme_lprime(rng))
        elif kind < 0.85:
            out.append(_theme_staged(rng))
        elif kind < 0.89:
            out.append(_theme_deep_iprime(rng))
        elif kind < 0.93:
            out.append(_theme_single_link(rng))
        elif kind < 0.96:
            out.append(_decorated_grid(rng))
        else:
            out.append(_random_graph(rng, n_range, edge_density))
    return out


FIXTURE_BUILDERS = {
    "grid-2x4": lambda: grid(2, 4),
    "book-2": lambda: pentagon_book(2),
    "book-3": lambda: pentagon_book(3),
    "chain-2": lambda: prism_chain(2),
}


def build_corpus(seed: int, per_class: int = 100,
                 max_vertices: int = 150) -> dict[int, list[MultiGraph]]:
    """Fixtures plus generated graphs: per_class graphs for each edge girth,
    the last few of each class pushed toward the vertex cap."""
    buckets: dict[int, list[MultiGraph]] = {4: [], 5: []}
    for name in sorted(FIXTURE_BUILDERS):
        g = FIXTURE_BUILDERS[name]()
        for graph, gstar in filter_in_scope([g]):
            buckets[gstar].append(graph)
    rng = random.Random(seed ^ 0x5EED)
    for gstar in (4, 5):
        big = 0
        while big < 3:
            g = _layered_blowup(rng, gstar == 5, scale=40)
            kept = filter_in_scope([g])
            if kept and kept[0][1] == gstar and kept[0][0].n <= max_vertices:
                buckets[gstar].append(kept[0][0])
                big += 1
    stream_seed = seed
    while any(len(b) < per_class for b in buckets.values()):
        for g, gstar in filter_in_scope(gen_candidates(stream_seed, count=40)):
            if g.n <= max_vertices and len(buckets[gstar]) < per_class:
                buckets[gstar].append(g)
        stream_seed += 1
        if stream_seed - seed > 4000:
            raise RuntimeError("corpus generation failed to meet the quota")
    return buckets
