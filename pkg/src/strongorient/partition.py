"""Layered vertex partition relative to a base edge, and its refinements.

Every vertex is first binned by its distance pair to the two ends (u, v) of a
selected base edge, then refined through a fixed hierarchy of cells whose
definitions drive both the orientation stages and the distance verifier.
Most cells are determined by the graph alone ("static"); a handful depend on
which vertices have already been touched by orientation stages and are filled
in at the four checkpoints D1..D4.

A note on V(Di): we take V(Di) to be the set of vertices incident to at least
one directed edge at checkpoint i.  This matches every use of the staged
cells (they capture exactly the vertices a previous stage touched); no other
reading is supported.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import InternalError, PreconditionError
from .graph import (
    INF,
    MultiGraph,
    bfs_distances,
    diameter,
    edge_girth,
    find_bridges,
    graph_edge_girth,
    is_connected,
    multi_source_distances,
)
from .mixed import MixedOrientation

VALID_LAYERS = {
    (0, 1), (1, 0), (1, 2), (2, 1), (2, 2), (2, 3),
    (3, 2), (3, 3), (3, 4), (4, 3), (4, 4),
}

LAYER_NAMES = {
    (1, 2): "S12", (2, 1): "S21", (2, 2): "S22", (2, 3): "S23",
    (3, 2): "S32", (3, 3): "S33", (3, 4): "S34", (4, 3): "S43", (4, 4): "S44",
}

# parent cell -> refinement cells, used to resolve a vertex's finest label
CHILDREN: dict[str, tuple[str, ...]] = {
    "S12": ("A'", "A"), "S21": ("B'", "B"), "S23": ("I'", "I"),
    "S32": ("J'", "J"), "S33": ("X'", "X"), "S34": ("K'", "K"),
    "S43": ("L'", "L"), "S44": ("M'", "M"),
    "A": tuple(f"A{i}" for i in range(1, 10)),
    "A9": tuple(f"A9{i}" for i in range(1, 6)),
    "A'": ("A'1", "A'2", "A'3"),
    "B": tuple(f"B{i}" for i in range(1, 11)),
    "B10": ("B10_1", "B10_2"),
    "B'": ("B'1", "B'2", "B'3"),
    "I": tuple(f"I{i}" for i in range(1, 7)),
    "I6": ("I61", "I62"),
    "I61": ("I61_1", "I61_2", "I61_3"),
    "I61_2": ("I61_21", "I61_22"),
    "I62": ("I62_1", "I62_2", "I62_3"),
    "I62_3": ("I62_31", "I62_32", "I62_33"),
    "I'": tuple(f"I'{i}" for i in range(1, 9)),
    "I'4": ("I'41", "I'42"), "I'5": ("I'51", "I'52"), "I'6": ("I'61", "I'62"),
    "I'7": ("I'71", "I'72", "I'73"), "I'8": ("I'81", "I'82", "I'83"),
    "J": tuple(f"J{i}" for i in range(1, 7)),
    "J'": tuple(f"J'{i}" for i in range(1, 7)),
    "J'3": ("J'31", "J'32"), "J'4": ("J'41", "J'42"),
    "J'5": ("J'51", "J'52", "J'53"), "J'6": ("J'61", "J'62", "J'63"),
    "X'": ("X'1", "X'2", "X'3", "X'4", "X'5"),
    "K": ("K1", "K2", "K3"),
    "K'": tuple(f"K'{i}" for i in range(1, 11)),
    "K'2": ("K'21", "K'22", "K'23"),
    "K'8": ("K'81", "K'82", "K'83"), "K'9": ("K'91", "K'92", "K'93"),
    "L": ("L1", "L2", "L3", "L4"),
    "L'": ("L'1", "L'2", "L'3", "L'4", "L'5"),
    "L'1": ("L'11", "L'12", "L'13"),
    "L'4": ("L'41", "L'42", "L'43"),
    "L'5": ("L'51", "L'52", "L'53", "L'54"),
    "M": ("M1", "M2", "M3"),
    "M3": ("M31", "M32"),
    "M'": ("M'1", "M'2"),
    "M'2": ("M'21", "M'22", "M'23"),
}


@dataclass(frozen=True)
class BaseEdge:
    u: int
    v: int
    e: int
    gstar: int

    def swapped(self) -> "BaseEdge":
        return BaseEdge(self.v, self.u, self.e, self.gstar)


class LayerPartition:
    def __init__(self, assign: dict[int, tuple[int, int]]):
        self.assign = assign
        self.layers: dict[tuple[int, int], frozenset[int]] = {}
        buckets: dict[tuple[int, int], set[int]] = {}
        for v, ij in assign.items():
            buckets.setdefault(ij, set()).add(v)
        for ij, vs in buckets.items():
            self.layers[ij] = frozenset(vs)

    def members(self, i: int, j: int) -> frozenset[int]:
        return self.layers.get((i, j), frozenset())


class FineLabels:
    """Hierarchical cell assignment; cells accumulate as checkpoints pass."""

    def __init__(self, g: MultiGraph, base: BaseEdge, layers: LayerPartition):
        self.g = g
        self.base = base
        self.layers = layers
        self.cells: dict[str, frozenset[int]] = {}
        self.istar: frozenset[int] = frozenset()
        self.checkpoint_vertices: dict[str, frozenset[int]] = {}
        self.checkpoint_dirs: dict[str, tuple[int, ...]] = {}
        for ij, name in LAYER_NAMES.items():
            self.cells[name] = layers.members(*ij)

    def cell(self, name: str) -> frozenset[int]:
        return self.cells.get(name, frozenset())

    def has(self, name: str) -> bool:
        return name in self.cells

    def union(self, *names: str) -> set[int]:
        out: set[int] = set()
        for n in names:
            out |= self.cell(n)
        return out

    def set(self, name: str, members: Iterable[int]) -> None:
        self.cells[name] = frozenset(members)

    def path(self, v: int) -> list[str]:
        if v == self.base.u:
            return ["u"]
        if v == self.base.v:
            return ["v"]
        name = LAYER_NAMES[self.layers.assign[v]]
        chain = [name]
        while True:
            nxt = None
            for child in CHILDREN.get(chain[-1], ()):
                if child in self.cells and v in self.cells[child]:
                    nxt = child
                    break
            if nxt is None:
                return chain
            chain.append(nxt)

    def finest(self, v: int) -> str:
        return self.path(v)[-1]

    def dump(self) -> str:
        lines = [f"{v}\t{'.'.join(self.path(v))}" for v in range(self.g.n)]
        return "\n".join(lines) + "\n"


def select_base_edge(g: MultiGraph) -> BaseEdge:
    """Lowest-id edge realizing the graph edge girth; u is its lower endpoint.

    Validates the full pipeline precondition and names the violation.
    """
    if g.n == 0 or g.m == 0:
        raise PreconditionError("graph is empty")
    if not is_connected(g):
        raise PreconditionError("graph is not connected")
    if find_bridges(g):
        raise PreconditionError("graph has a bridge")
    d = diameter(g)
    if d != 4:
        raise PreconditionError(f"diameter is {d}, need 4")
    gstar = graph_edge_girth(g)
    if gstar not in (4, 5):
        raise PreconditionError(f"edge girth is {gstar}, need 4 or 5")
    for eid in range(g.m):
        if edge_girth(g, eid) == gstar:
            a, b = g.ends[eid]
            return BaseEdge(min(a, b), max(a, b), eid, int(gstar))
    raise InternalError("no edge achieves the edge girth")  # pragma: no cover


def layer_partition(g: MultiGraph, base: BaseEdge) -> LayerPartition:
    du = bfs_distances(g, base.u)
    dv = bfs_distances(g, base.v)
    assign: dict[int, tuple[int, int]] = {}
    for w in range(g.n):
        i, j = du[w], dv[w]
        if i is INF or j is INF or (int(i), int(j)) not in VALID_LAYERS:
            raise InternalError(
                f"vertex {w} at distances ({i},{j}) falls outside the layer table"
            )
        assign[w] = (int(i), int(j))
    return LayerPartition(assign)


# ---------------------------------------------------------------------------
# level 1: primed / unprimed split of each layer
# ---------------------------------------------------------------------------

def coarse_refine(g: MultiGraph, labels: FineLabels) -> FineLabels:
    cells = labels.cells
    u, v = labels.base.u, labels.base.v
    s12, s21 = cells["S12"], cells["S21"]
    s22, s23, s32 = cells["S22"], cells["S23"], cells["S32"]
    s33, s34, s43, s44 = cells["S33"], cells["S34"], cells["S43"], cells["S44"]

    ap = {w for w in s12 if g.neighbor_set(w) <= s12 | {u}}
    labels.set("A'", ap)
    a = s12 - ap
    labels.set("A", a)

    bp = {w for w in s21 if g.neighbor_set(w) <= s21 | {v}}
    labels.set("B'", bp)
    b = s21 - bp
    labels.set("B", b)

    ip = {w for w in s23 if g.neighbor_set(w) <= s23 | a}
    labels.set("I'", ip)
    i_ = s23 - ip
    labels.set("I", i_)

    jp = {w for w in s32 if g.neighbor_set(w) <= s32 | b}
    labels.set("J'", jp)
    j_ = s32 - jp
    labels.set("J", j_)

    kp = {w for w in s34 if g.neighbor_set(w) <= s34 | i_}
    labels.set("K'", kp)
    k = s34 - kp
    labels.set("K", k)

    lp = {w for w in s43 if g.neighbor_set(w) <= s43 | j_}
    labels.set("L'", lp)
    l = s43 - lp
    labels.set("L", l)

    near = s22 | i_ | j_ | k | l
    xp = {w for w in s33 if _edge_count_into(g, w, near) == 1}
    labels.set("X'", xp)
    labels.set("X", s33 - xp)

    far = s33 | k | l
    mp = {w for w in s44 if _edge_count_into(g, w, far) == 1}
    labels.set("M'", mp)
    labels.set("M", s44 - mp)
    return labels


def _edge_count_into(g: MultiGraph, w: int, targets: frozenset[int] | set[int]) -> int:
    return sum(1 for _, x in g.incident(w) if x in targets)


def _adjacent_to(g: MultiGraph, pool: Iterable[int], targets: set[int] | frozenset[int]):
    return {w for w in pool if g.neighbor_set(w) & targets}


def _isolated_split(g: MultiGraph, pool: set[int] | frozenset[int]):
    """(isolated, non-isolated) within the induced subgraph on pool."""
    iso = {w for w in pool if not (g.neighbor_set(w) & pool - {w})}
    return iso, set(pool) - iso


# ---------------------------------------------------------------------------
# level 2: orientation-independent refinements
# ---------------------------------------------------------------------------

def static_refine(g: MultiGraph, labels: FineLabels) -> FineLabels:
    c = labels.cell
    s22, s33 = c("S22"), c("S33")
    A, B, I, J, K, L = c("A"), c("B"), c("I"), c("J"), c("K"), c("L")
    Xp, X, M = c("X'"), c("X"), c("M")

    m1 = _adjacent_to(g, M, K)
    m2 = _adjacent_to(g, M - m1, L)
    labels.set("M1", m1)
    labels.set("M2", m2)
    labels.set("M3", M - m1 - m2)

    k1 = _adjacent_to(g, K, s33 | L)
    k2 = _adjacent_to(g, K - k1, k1)
    k3 = K - k1 - k2
    labels.set("K1", k1)
    labels.set("K2", k2)
    labels.set("K3", k3)

    i1 = _adjacent_to(g, I, s22 | J)
    i2 = _adjacent_to(g, I - i1, s33)
    i3 = _adjacent_to(g, I - i1 - i2, i1)
    i4 = _adjacent_to(g, I - i1 - i2 - i3, i2 | k1)
    i5 = _adjacent_to(g, I - i1 - i2 - i3 - i4, k2 | k3)
    i6 = I - i1 - i2 - i3 - i4 - i5
    for name, cell in zip(("I1", "I2", "I3", "I4", "I5", "I6"),
                          (i1, i2, i3, i4, i5, i6)):
        labels.set(name, cell)

    j1 = _adjacent_to(g, J, s22 | I)
    j2 = _adjacent_to(g, J - j1, s33)
    j3 = _adjacent_to(g, J - j1 - j2, j1)
    labels.set("J1", j1)
    labels.set("J2", j2)
    labels.set("J3", j3)

    Lp = c("L'")
    l1 = _adjacent_to(g, L, K)
    l2 = _adjacent_to(g, L - l1, l1 | m1)
    l3 = _adjacent_to(g, L - l1 - l2, j1) & _adjacent_to(g, L, Lp)
    l4 = L - l1 - l2 - l3
    for name, cell in zip(("L1", "L2", "L3", "L4"), (l1, l2, l3, l4)):
        labels.set(name, cell)

    j4 = _adjacent_to(g, J - j1 - j2 - j3, j2 | l1)
    j5 = _adjacent_to(g, J - j1 - j2 - j3 - j4, l2 | l3 | l4)
    j6 = J - j1 - j2 - j3 - j4 - j5
    labels.set("J4", j4)
    labels.set("J5", j5)
    labels.set("J6", j6)

    a1 = _adjacent_to(g, A, B)
    a2 = _adjacent_to(g, A - a1, s22)
    a3 = _adjacent_to(g, A - a1 - a2, a1)
    acc = a1 | a2 | a3
    a_cells = [a1, a2, a3]
    for ii in (i1, i2, i3, i4, i5):
        nxt = _adjacent_to(g, A - acc, ii)
        a_cells.append(nxt)
        acc |= nxt
    a_cells.append(A - acc)
    for idx, cell in enumerate(a_cells, start=1):
        labels.set(f"A{idx}", cell)

    b1 = _adjacent_to(g, B, A)
    b2 = _adjacent_to(g, B - b1, s22)
    b3 = _adjacent_to(g, B - b1 - b2, b1)
    acc = b1 | b2 | b3
    b_cells = [b1, b2, b3]
    for jj in (j1, j2, j3, j4, j5, j6):
        nxt = _adjacent_to(g, B - acc, jj)
        b_cells.append(nxt)
        acc |= nxt
    b_cells.append(B - acc)
    for idx, cell in enumerate(b_cells, start=1):
        labels.set(f"B{idx}", cell)

    xp1 = _adjacent_to(g, Xp, m1)
    xp2 = _adjacent_to(g, Xp - xp1, m2)
    xp3 = _adjacent_to(g, Xp - xp1 - xp2, X)
    rest = Xp - xp1 - xp2 - xp3
    xp4, xp5 = _isolated_split(g, rest)
    for name, cell in zip(("X'1", "X'2", "X'3", "X'4", "X'5"),
                          (xp1, xp2, xp3, xp4, xp5)):
        labels.set(name, cell)

    b10 = labels.cell("B10")
    b10_1, b10_2 = _isolated_split(g, b10)
    labels.set("B10_1", b10_1)
    labels.set("B10_2", b10_2)

    i61 = _adjacent_to(g, i6, a1 | a2 | a3)
    i62 = i6 - i61
    labels.set("I61", i61)
    labels.set("I62", i62)
    i61_1 = _adjacent_to(g, i61, i62)
    i61_2, i61_3 = _isolated_split(g, i61 - i61_1)
    labels.set("I61_1", i61_1)
    labels.set("I61_2", i61_2)
    labels.set("I61_3", i61_3)
    labels.set("I62_1", _adjacent_to(g, i62, i61))

    _refine_lprime(g, labels)
    return labels


def _refine_lprime(g: MultiGraph, labels: FineLabels) -> None:
    c = labels.cell
    Lp, Kp = c("L'"), c("K'")
    if not Lp:
        for name in ("L'1", "L'11", "L'12", "L'13", "L'2", "L'3", "L'4", "L'5",
                     "L'41", "L'42", "L'43", "L'51", "L'52", "L'53", "L'54"):
            labels.set(name, ())
        return
    if not Kp:
        raise InternalError("L' nonempty but K' empty after the symmetry swap")
    dk = multi_source_distances(g, Kp)

    l1, l2_, l3_, l4 = c("L1"), c("L2"), c("L3"), c("L4")
    lp1 = _adjacent_to(g, Lp, l1 | l2_ | l3_)
    labels.set("L'1", lp1)
    labels.set("L'11", _adjacent_to(g, lp1, l1 | l3_))
    labels.set("L'12", _adjacent_to(g, lp1 - c("L'11"), c("J1")))
    labels.set("L'13", lp1 - c("L'11") - c("L'12"))

    i12k1 = labels.union("I1", "I2", "K1")
    X = c("X")
    lp2 = set()
    for w in Lp - lp1:
        if dk[w] != 4:
            continue
        if any(dk[x1] == 3
               and any(dk[x2] == 2
                       and any(dk[x3] == 1 for x3 in g.neighbor_set(x2) & i12k1)
                       for x2 in g.neighbor_set(x1) & X)
               for x1 in g.neighbor_set(w) & l4):
            lp2.add(w)
    labels.set("L'2", lp2)

    rest = Lp - lp1 - lp2
    lp3, nrest = _isolated_split(g, rest)
    labels.set("L'3", lp3)
    lp4 = {w for w in nrest if dk[w] == 3}
    lp5 = {w for w in nrest if dk[w] == 4}
    if lp4 | lp5 != nrest:
        bad = {w: dk[w] for w in nrest - lp4 - lp5}
        raise InternalError(f"L' vertices at unexpected distance from K': {bad}")
    labels.set("L'4", lp4)
    labels.set("L'5", lp5)

    lp41 = _adjacent_to(g, lp4, lp5)
    lp42, lp43 = _isolated_split(g, lp4 - lp41)
    labels.set("L'41", lp41)
    labels.set("L'42", lp42)
    labels.set("L'43", lp43)

    lp51 = _adjacent_to(g, lp5, lp4)
    rest5 = lp5 - lp51
    iso5, _ = _isolated_split(g, rest5)
    lp52 = iso5 | _adjacent_to(g, rest5, c("J6"))
    lp53, lp54 = _isolated_split(g, rest5 - lp52)
    labels.set("L'51", lp51)
    labels.set("L'52", lp52)
    labels.set("L'53", lp53)
    labels.set("L'54", lp54)


# ---------------------------------------------------------------------------
# stage-dependent refinements at checkpoints D1..D4
# ---------------------------------------------------------------------------

def staged_refine(g: MultiGraph, labels: FineLabels, o: MixedOrientation,
                  checkpoint: str) -> FineLabels:
    if checkpoint not in ("D1", "D2", "D3", "D4"):
        raise ValueError(f"unknown checkpoint {checkpoint!r}")
    touched = frozenset(o.directed_vertices())
    labels.checkpoint_vertices[checkpoint] = touched
    labels.checkpoint_dirs[checkpoint] = o.direction_snapshot()
    if checkpoint == "D1":
        _staged_d1(g, labels, touched)
    elif checkpoint == "D2":
        _staged_d2(g, labels, touched)
    elif checkpoint == "D3":
        _staged_d3(g, labels, o, touched)
    else:
        _staged_d4(g, labels, touched)
    return labels


def _staged_d1(g: MultiGraph, labels: FineLabels, d1: frozenset[int]) -> None:
    c = labels.cell
    m3 = c("M3")
    labels.set("M31", m3 & d1)
    labels.set("M32", m3 - d1)
    mp = c("M'")
    mp1 = mp & d1
    mp2 = mp - d1
    labels.set("M'1", mp1)
    labels.set("M'2", mp2)
    mp21 = _adjacent_to(g, mp2, c("M"))
    mp22, mp23 = _isolated_split(g, mp2 - mp21)
    labels.set("M'21", mp21)
    labels.set("M'22", mp22)
    labels.set("M'23", mp23)


def _staged_d2(g: MultiGraph, labels: FineLabels, d2: frozenset[int]) -> None:
    c = labels.cell
    bp = c("B'")
    bp1 = bp & d2
    bp2, bp3 = _isolated_split(g, bp - bp1)
    labels.set("B'1", bp1)
    labels.set("B'2", bp2)
    labels.set("B'3", bp3)

    jp = c("J'")
    jp1 = jp & d2
    jp2 = _adjacent_to(g, jp - jp1, labels.union("J1", "J2", "J3"))
    jp3 = _adjacent_to(g, jp - jp1 - jp2, labels.union("J4", "J5", "J6"))
    rest = jp - jp1 - jp2 - jp3
    jp4, nrest = _isolated_split(g, rest)
    b_low = labels.union(*(f"B{i}" for i in range(1, 7)))
    b_high = labels.union("B7", "B8", "B9", "B10")
    jp5 = _adjacent_to(g, nrest, b_low)
    jp6 = _adjacent_to(g, nrest - jp5, b_high)
    if jp5 | jp6 != nrest:
        raise InternalError(f"J' vertices without B-neighbors: {nrest - jp5 - jp6}")
    for name, cell in zip(("J'1", "J'2", "J'3", "J'4", "J'5", "J'6"),
                          (jp1, jp2, jp3, jp4, jp5, jp6)):
        labels.set(name, cell)

    labels.set("J'31", _adjacent_to(g, jp3, b_low))
    labels.set("J'32", jp3 - c("J'31"))
    labels.set("J'41", _adjacent_to(g, jp4, b_low))
    labels.set("J'42", jp4 - c("J'41"))

    jp51 = _adjacent_to(g, jp5, jp6)
    jp52, jp53 = _isolated_split(g, jp5 - jp51)
    labels.set("J'51", jp51)
    labels.set("J'52", jp52)
    labels.set("J'53", jp53)

    jp61 = _adjacent_to(g, jp6, jp5)
    jp62, jp63 = _isolated_split(g, jp6 - jp61)
    labels.set("J'61", jp61)
    labels.set("J'62", jp62)
    labels.set("J'63", jp63)


def _staged_d3(g: MultiGraph, labels: FineLabels, o: MixedOrientation,
               d3: frozenset[int]) -> None:
    c = labels.cell
    A = c("A")
    i61_2 = c("I61_2")
    # split by whether some A-neighbor already points into the vertex
    i61_21 = set()
    for w in i61_2:
        if any(x in A for _, x in o.in_arcs(w)):
            i61_21.add(w)
    labels.set("I61_21", i61_21)
    labels.set("I61_22", i61_2 - i61_21)

    ip = c("I'")
    ip1 = ip & d3
    labels.set("I'1", ip1)
    i61_live = c("I61") - c("I61_22")
    labels.set("I'2", _adjacent_to(g, ip - ip1, i61_live))

    i62 = c("I62")
    i62_1 = c("I62_1")
    i62_2 = (i62 - i62_1) & d3
    labels.set("I62_2", i62_2)
    labels.set("I62_3", i62 - i62_1 - i62_2)

    labels.set("K'1", c("K'") & d3)

    a9 = c("A9")
    a91 = _adjacent_to(g, a9, ip1)
    a92 = _adjacent_to(g, a9 - a91, c("I'2"))
    a93 = _adjacent_to(g, a9 - a91 - a92, c("I61") | i62_1 | i62_2)
    a94, a95 = _isolated_split(g, a9 - a91 - a92 - a93)
    for name, cell in zip(("A91", "A92", "A93", "A94", "A95"),
                          (a91, a92, a93, a94, a95)):
        labels.set(name, cell)


def _staged_d4(g: MultiGraph, labels: FineLabels, d4: frozenset[int]) -> None:
    c = labels.cell
    ap = c("A'")
    ap1 = ap & d4
    ap2, ap3 = _isolated_split(g, ap - ap1)
    labels.set("A'1", ap1)
    labels.set("A'2", ap2)
    labels.set("A'3", ap3)

    ip = c("I'")
    done = labels.union("I'1", "I'2")
    ip3 = (ip - done) & d4
    labels.set("I'3", ip3)
    done |= ip3
    I, i6 = c("I"), c("I6")
    i62_3 = c("I62_3")
    ip4 = _adjacent_to(g, ip - done, I - i62_3)
    labels.set("I'4", ip4)
    done |= ip4
    ip5 = _adjacent_to(g, ip - done, i62_3)
    labels.set("I'5", ip5)
    done |= ip5
    ip6, nrest = _isolated_split(g, ip - done)
    labels.set("I'6", ip6)
    a_low = labels.union("A1", "A2", "A3", "A4")
    a_mid = labels.union("A1", "A2", "A3", "A4", "A5", "A6")
    a_high = labels.union("A7", "A8", "A9")
    ip7 = _adjacent_to(g, nrest, a_low)
    ip8 = _adjacent_to(g, nrest - ip7, labels.union("A5", "A6") | a_high)
    if ip7 | ip8 != nrest:
        raise InternalError(f"I' vertices without A-neighbors: {nrest - ip7 - ip8}")
    labels.set("I'7", ip7)
    labels.set("I'8", ip8)

    # the split pairs are disjointified with priority to the first cell
    labels.set("I'41", _adjacent_to(g, ip4, a_mid))
    labels.set("I'42", _adjacent_to(g, ip4 - c("I'41"), a_high))
    labels.set("I'51", _adjacent_to(g, ip5, a_mid))
    labels.set("I'52", _adjacent_to(g, ip5 - c("I'51"), a_high))
    labels.set("I'61", _adjacent_to(g, ip6, a_mid))
    labels.set("I'62", _adjacent_to(g, ip6 - c("I'61"), a_high))

    ip71 = _adjacent_to(g, ip7, ip8)
    ip72, ip73 = _isolated_split(g, ip7 - ip71)
    labels.set("I'71", ip71)
    labels.set("I'72", ip72)
    labels.set("I'73", ip73)
    ip81 = _adjacent_to(g, ip8, ip7)
    ip82, ip83 = _isolated_split(g, ip8 - ip81)
    labels.set("I'81", ip81)
    labels.set("I'82", ip82)
    labels.set("I'83", ip83)

    i62_31 = i62_3 & d4
    feeders = labels.union("I'1", "I'2", "I'3", "I'41", "I'51") | (I - i6)
    i62_32 = _adjacent_to(g, i62_3 - i62_31, feeders)
    i62_33 = i62_3 - i62_31 - i62_32
    labels.set("I62_31", i62_31)
    labels.set("I62_32", i62_32)
    labels.set("I62_33", i62_33)

    _refine_kprime(g, labels)


def _refine_kprime(g: MultiGraph, labels: FineLabels) -> None:
    c = labels.cell
    kp = c("K'")
    I, K = c("I"), c("K")
    i62_3 = c("I62_3")
    i62_31, i62_32, i62_33 = c("I62_31"), c("I62_32"), c("I62_33")
    B = c("B")
    if not kp:
        for name in CHILDREN["K'"] + CHILDREN["K'2"] + CHILDREN["K'8"] + CHILDREN["K'9"]:
            labels.set(name, ())
        labels.istar = frozenset()
        return

    kp1 = c("K'1")
    db = multi_source_distances(g, B) if B else [INF] * g.n
    kp2 = {w for w in kp - kp1 if db[w] == 3}
    kp3 = _adjacent_to(g, kp - kp1 - kp2, kp1 | kp2)
    done = kp1 | kp2 | kp3
    kp4 = _adjacent_to(g, kp - done, K)
    done |= kp4
    kp5 = _adjacent_to(g, kp - done, I - i62_3) & _adjacent_to(g, kp, i62_33)
    done |= kp5
    kp6 = _adjacent_to(g, kp - done, i62_31 | i62_32) & _adjacent_to(g, kp, i62_33)
    done |= kp6
    kp7, nrest = _isolated_split(g, kp - done)
    kp8 = _adjacent_to(g, nrest, I - i62_3)
    kp9 = _adjacent_to(g, nrest - kp8, i62_31 | i62_32)
    kp10 = _adjacent_to(g, nrest - kp8 - kp9, i62_33)
    if kp8 | kp9 | kp10 != nrest:
        raise InternalError(f"K' vertices without I-neighbors: {nrest - kp8 - kp9 - kp10}")
    for name, cell in zip(("K'2", "K'3", "K'4", "K'5", "K'6", "K'7", "K'8",
                           "K'9", "K'10"),
                          (kp2, kp3, kp4, kp5, kp6, kp7, kp8, kp9, kp10)):
        labels.set(name, cell)

    kp21 = _adjacent_to(g, kp2, kp3)
    kp22, kp23 = _isolated_split(g, kp2 - kp21)
    labels.set("K'21", kp21)
    labels.set("K'22", kp22)
    labels.set("K'23", kp23)
    kp81 = _adjacent_to(g, kp8, kp9)
    kp82, kp83 = _isolated_split(g, kp8 - kp81)
    labels.set("K'81", kp81)
    labels.set("K'82", kp82)
    labels.set("K'83", kp83)
    kp91 = _adjacent_to(g, kp9, kp8)
    kp92, kp93 = _isolated_split(g, kp9 - kp91)
    labels.set("K'91", kp91)
    labels.set("K'92", kp92)
    labels.set("K'93", kp93)

    # I*: interior I-vertices of shortest paths from K'2 down to B
    istar: set[int] = set()
    if kp2 and B:
        for w in kp2:
            ring1 = g.neighbor_set(w)
            for x in ring1:
                if db[x] == 2 and x in I:
                    istar.add(x)
            ring2 = set()
            for x in ring1:
                if db[x] == 2:
                    ring2 |= g.neighbor_set(x)
            for y in ring2:
                if db[y] == 1 and y in I:
                    istar.add(y)
    labels.istar = frozenset(istar)
