"""Independent re-verification of the partition against its raw definitions.

check_partition re-derives, per vertex, the defining predicate of every cell
on its label path and checks that the predicates of all earlier siblings fail
(cells are carved out by "and not already taken" subtractions, so earlier
siblings must reject the vertex).  Checkpoint-dependent predicates are
re-evaluated against the direction snapshot stored at that checkpoint, not
against the final orientation.  Also asserts the structural facts the
orientation stages lean on: the neighborhood propositions, the guaranteed
empty cells, and the base-edge symmetry choice.
"""

from __future__ import annotations

from typing import Callable

from .graph import MultiGraph, bfs_distances, multi_source_distances
from .partition import CHILDREN, LAYER_NAMES, FineLabels


class _Ctx:
    def __init__(self, g: MultiGraph, lab: FineLabels):
        self.g = g
        self.lab = lab
        kp = lab.cell("K'")
        self.dk = multi_source_distances(g, kp) if kp else None
        b = lab.cell("B")
        self.db = multi_source_distances(g, b) if b else None
        self.touched: dict[str, frozenset[int]] = {}
        for cp, dirs in lab.checkpoint_dirs.items():
            seen: set[int] = set()
            for eid, d in enumerate(dirs):
                if d:
                    seen.update(g.ends[eid])
            self.touched[cp] = frozenset(seen)

    def nb(self, w: int) -> frozenset[int]:
        return self.g.neighbor_set(w)

    def edge_count(self, w: int, targets) -> int:
        return sum(1 for _, x in self.g.incident(w) if x in targets)

    def in_checkpoint(self, w: int, cp: str) -> bool:
        return w in self.touched.get(cp, frozenset())

    def pool(self, parent: str, before: tuple[str, ...]) -> set[int]:
        out = set(self.lab.cell(parent))
        for name in before:
            out -= self.lab.cell(name)
        return out

    def isolated_in(self, w: int, pool: set[int]) -> bool:
        return not (self.nb(w) & (pool - {w}))


def _raw_predicates(ctx: _Ctx) -> dict[str, Callable[[int], bool]]:
    g, lab = ctx.g, ctx.lab
    c, un = lab.cell, lab.union
    u, v = lab.base.u, lab.base.v

    def near_x(w):  # the single-link test for the middle layer
        return ctx.edge_count(w, c("S22") | c("I") | c("J") | c("K") | c("L")) == 1

    def near_m(w):
        return ctx.edge_count(w, c("S33") | c("K") | c("L")) == 1

    def lp2_pred(w):
        if ctx.dk is None or ctx.dk[w] != 4:
            return False
        i_first = un("I1", "I2", "K1")
        return any(
            ctx.dk[x1] == 3 and any(
                ctx.dk[x2] == 2 and any(
                    ctx.dk[x3] == 1 for x3 in ctx.nb(x2) & i_first)
                for x2 in ctx.nb(x1) & c("X"))
            for x1 in ctx.nb(w) & c("L4"))

    def a_in_arc_at_d3(w):
        dirs = lab.checkpoint_dirs.get("D3", ())
        A = c("A")
        for eid, x in g.incident(w):
            if x in A and dirs[eid]:
                a, b = g.ends[eid]
                tail = a if dirs[eid] == 1 else b
                if tail == x:
                    return True
        return False

    preds: dict[str, Callable[[int], bool]] = {
        "A'": lambda w: ctx.nb(w) <= c("S12") | {u},
        "B'": lambda w: ctx.nb(w) <= c("S21") | {v},
        "I'": lambda w: ctx.nb(w) <= c("S23") | c("A"),
        "J'": lambda w: ctx.nb(w) <= c("S32") | c("B"),
        "X'": near_x,
        "K'": lambda w: ctx.nb(w) <= c("S34") | c("I"),
        "L'": lambda w: ctx.nb(w) <= c("S43") | c("J"),
        "M'": near_m,
        "A1": lambda w: bool(ctx.nb(w) & c("B")),
        "A2": lambda w: bool(ctx.nb(w) & c("S22")),
        "A3": lambda w: bool(ctx.nb(w) & c("A1")),
        "B1": lambda w: bool(ctx.nb(w) & c("A")),
        "B2": lambda w: bool(ctx.nb(w) & c("S22")),
        "B3": lambda w: bool(ctx.nb(w) & c("B1")),
        "I1": lambda w: bool(ctx.nb(w) & (c("S22") | c("J"))),
        "I2": lambda w: bool(ctx.nb(w) & c("S33")),
        "I3": lambda w: bool(ctx.nb(w) & c("I1")),
        "I4": lambda w: bool(ctx.nb(w) & (c("I2") | c("K1"))),
        "I5": lambda w: bool(ctx.nb(w) & (c("K2") | c("K3"))),
        "J1": lambda w: bool(ctx.nb(w) & (c("S22") | c("I"))),
        "J2": lambda w: bool(ctx.nb(w) & c("S33")),
        "J3": lambda w: bool(ctx.nb(w) & c("J1")),
        "J4": lambda w: bool(ctx.nb(w) & (c("J2") | c("L1"))),
        "J5": lambda w: bool(ctx.nb(w) & un("L2", "L3", "L4")),
        "K1": lambda w: bool(ctx.nb(w) & (c("S33") | c("L"))),
        "K2": lambda w: bool(ctx.nb(w) & c("K1")),
        "L1": lambda w: bool(ctx.nb(w) & c("K")),
        "L2": lambda w: bool(ctx.nb(w) & (c("L1") | c("M1"))),
        "L3": lambda w: bool(ctx.nb(w) & c("J1")) and bool(ctx.nb(w) & c("L'")),
        "M1": lambda w: bool(ctx.nb(w) & c("K")),
        "M2": lambda w: bool(ctx.nb(w) & c("L")),
        "X'1": lambda w: bool(ctx.nb(w) & c("M1")),
        "X'2": lambda w: bool(ctx.nb(w) & c("M2")),
        "X'3": lambda w: bool(ctx.nb(w) & c("X")),
        "X'4": lambda w: ctx.isolated_in(w, ctx.pool("X'", ("X'1", "X'2", "X'3"))),
        "B10_1": lambda w: ctx.isolated_in(w, set(c("B10"))),
        "I61": lambda w: bool(ctx.nb(w) & un("A1", "A2", "A3")),
        "I61_1": lambda w: bool(ctx.nb(w) & c("I62")),
        "I61_2": lambda w: ctx.isolated_in(w, ctx.pool("I61", ("I61_1",))),
        "I61_21": a_in_arc_at_d3,
        "I62_1": lambda w: bool(ctx.nb(w) & c("I61")),
        "I62_2": lambda w: ctx.in_checkpoint(w, "D3"),
        "I62_31": lambda w: ctx.in_checkpoint(w, "D4"),
        "I62_32": lambda w: bool(
            ctx.nb(w) & (un("I'1", "I'2", "I'3", "I'41", "I'51") | (c("I") - c("I6")))),
        "M31": lambda w: ctx.in_checkpoint(w, "D1"),
        "M'1": lambda w: ctx.in_checkpoint(w, "D1"),
        "M'21": lambda w: bool(ctx.nb(w) & c("M")),
        "M'22": lambda w: ctx.isolated_in(w, ctx.pool("M'2", ("M'21",))),
        "B'1": lambda w: ctx.in_checkpoint(w, "D2"),
        "B'2": lambda w: ctx.isolated_in(w, ctx.pool("B'", ("B'1",))),
        "A'1": lambda w: ctx.in_checkpoint(w, "D4"),
        "A'2": lambda w: ctx.isolated_in(w, ctx.pool("A'", ("A'1",))),
        "J'1": lambda w: ctx.in_checkpoint(w, "D2"),
        "J'2": lambda w: bool(ctx.nb(w) & un("J1", "J2", "J3")),
        "J'3": lambda w: bool(ctx.nb(w) & un("J4", "J5", "J6")),
        "J'4": lambda w: ctx.isolated_in(w, ctx.pool("J'", ("J'1", "J'2", "J'3"))),
        "J'5": lambda w: bool(ctx.nb(w) & un(*(f"B{i}" for i in range(1, 7)))),
        "J'6": lambda w: bool(ctx.nb(w) & un("B7", "B8", "B9", "B10")),
        "J'31": lambda w: bool(ctx.nb(w) & un(*(f"B{i}" for i in range(1, 7)))),
        "J'32": lambda w: bool(ctx.nb(w) & un("B7", "B8", "B9", "B10")),
        "J'41": lambda w: bool(ctx.nb(w) & un(*(f"B{i}" for i in range(1, 7)))),
        "J'42": lambda w: bool(ctx.nb(w) & un("B7", "B8", "B9", "B10")),
        "J'51": lambda w: bool(ctx.nb(w) & c("J'6")),
        "J'52": lambda w: ctx.isolated_in(w, ctx.pool("J'5", ("J'51",))),
        "J'61": lambda w: bool(ctx.nb(w) & c("J'5")),
        "J'62": lambda w: ctx.isolated_in(w, ctx.pool("J'6", ("J'61",))),
        "I'1": lambda w: ctx.in_checkpoint(w, "D3"),
        "I'2": lambda w: bool(ctx.nb(w) & (c("I61") - c("I61_22"))),
        "I'3": lambda w: ctx.in_checkpoint(w, "D4"),
        "I'4": lambda w: bool(ctx.nb(w) & (c("I") - c("I62_3"))),
        "I'5": lambda w: bool(ctx.nb(w) & c("I62_3")),
        "I'6": lambda w: ctx.isolated_in(
            w, ctx.pool("I'", ("I'1", "I'2", "I'3", "I'4", "I'5"))),
        "I'7": lambda w: bool(ctx.nb(w) & un("A1", "A2", "A3", "A4")),
        "I'8": lambda w: bool(ctx.nb(w) & un("A5", "A6", "A7", "A8", "A9")),
        "I'41": lambda w: bool(ctx.nb(w) & un("A1", "A2", "A3", "A4", "A5", "A6")),
        "I'42": lambda w: bool(ctx.nb(w) & un("A7", "A8", "A9")),
        "I'51": lambda w: bool(ctx.nb(w) & un("A1", "A2", "A3", "A4", "A5", "A6")),
        "I'52": lambda w: bool(ctx.nb(w) & un("A7", "A8", "A9")),
        "I'61": lambda w: bool(ctx.nb(w) & un("A1", "A2", "A3", "A4", "A5", "A6")),
        "I'62": lambda w: bool(ctx.nb(w) & un("A7", "A8", "A9")),
        "I'71": lambda w: bool(ctx.nb(w) & c("I'8")),
        "I'72": lambda w: ctx.isolated_in(w, ctx.pool("I'7", ("I'71",))),
        "I'81": lambda w: bool(ctx.nb(w) & c("I'7")),
        "I'82": lambda w: ctx.isolated_in(w, ctx.pool("I'8", ("I'81",))),
        "K'1": lambda w: ctx.in_checkpoint(w, "D3"),
        "K'2": lambda w: ctx.db is not None and ctx.db[w] == 3,
        "K'3": lambda w: bool(ctx.nb(w) & (c("K'1") | c("K'2"))),
        "K'4": lambda w: bool(ctx.nb(w) & c("K")),
        "K'5": lambda w: bool(ctx.nb(w) & (c("I") - c("I62_3")))
                         and bool(ctx.nb(w) & c("I62_33")),
        "K'6": lambda w: bool(ctx.nb(w) & un("I62_31", "I62_32"))
                         and bool(ctx.nb(w) & c("I62_33")),
        "K'7": lambda w: ctx.isolated_in(
            w, ctx.pool("K'", ("K'1", "K'2", "K'3", "K'4", "K'5", "K'6"))),
        "K'8": lambda w: bool(ctx.nb(w) & (c("I") - c("I62_3"))),
        "K'9": lambda w: bool(ctx.nb(w) & un("I62_31", "I62_32")),
        "K'10": lambda w: bool(ctx.nb(w) & c("I62_33")),
        "K'21": lambda w: bool(ctx.nb(w) & c("K'3")),
        "K'22": lambda w: ctx.isolated_in(w, ctx.pool("K'2", ("K'21",))),
        "K'81": lambda w: bool(ctx.nb(w) & c("K'9")),
        "K'82": lambda w: ctx.isolated_in(w, ctx.pool("K'8", ("K'81",))),
        "K'91": lambda w: bool(ctx.nb(w) & c("K'8")),
        "K'92": lambda w: ctx.isolated_in(w, ctx.pool("K'9", ("K'91",))),
        "L'1": lambda w: bool(ctx.nb(w) & un("L1", "L2", "L3")),
        "L'2": lp2_pred,
        "L'3": lambda w: ctx.isolated_in(w, ctx.pool("L'", ("L'1", "L'2"))),
        "L'4": lambda w: ctx.dk is not None and ctx.dk[w] == 3,
        "L'5": lambda w: ctx.dk is not None and ctx.dk[w] == 4,
        "L'11": lambda w: bool(ctx.nb(w) & (c("L1") | c("L3"))),
        "L'12": lambda w: bool(ctx.nb(w) & c("J1")),
        "L'41": lambda w: bool(ctx.nb(w) & c("L'5")),
        "L'42": lambda w: ctx.isolated_in(w, ctx.pool("L'4", ("L'41",))),
        "L'51": lambda w: bool(ctx.nb(w) & c("L'4")),
        "L'52": lambda w: (ctx.isolated_in(w, ctx.pool("L'5", ("L'51",)))
                           or bool(ctx.nb(w) & c("J6"))),
        "L'53": lambda w: ctx.isolated_in(w, ctx.pool("L'5", ("L'51", "L'52"))),
    }
    for j in range(1, 6):
        preds[f"A{3 + j}"] = (lambda cell: lambda w: bool(ctx.nb(w) & c(cell)))(f"I{j}")
    for j in range(1, 7):
        preds[f"B{3 + j}"] = (lambda cell: lambda w: bool(ctx.nb(w) & c(cell)))(f"J{j}")
    return preds


def check_partition(g: MultiGraph, lab: FineLabels) -> list[str]:
    """All partition-soundness problems found, as human-readable strings."""
    problems: list[str] = []
    base = lab.base
    ctx = _Ctx(g, lab)
    preds = _raw_predicates(ctx)

    # layers agree with two independent breadth-first searches
    du = bfs_distances(g, base.u)
    dv = bfs_distances(g, base.v)
    for w in range(g.n):
        got = lab.layers.assign[w]
        if (du[w], dv[w]) != got:
            problems.append(f"vertex {w}: layer {got} but distances ({du[w]},{dv[w]})")
    if lab.layers.members(1, 1):
        problems.append("distance-(1,1) layer is nonempty")

    # each refined family partitions its parent
    for parent, kids in CHILDREN.items():
        missing = [k for k in kids if not lab.has(k)]
        if missing:
            problems.append(f"{parent}: children never computed: {missing}")
            continue
        seen: set[int] = set()
        for k in kids:
            cell = lab.cell(k)
            overlap = seen & cell
            if overlap:
                problems.append(f"{k}: overlaps an earlier sibling on {sorted(overlap)}")
            seen |= cell
        parent_cell = set(lab.cell(parent))
        if seen != parent_cell:
            problems.append(
                f"{parent}: children cover {len(seen)} of {len(parent_cell)} members"
            )

    # per-vertex: own predicate holds, earlier sibling predicates fail
    for w in range(g.n):
        if w in (base.u, base.v):
            continue
        chain = lab.path(w)
        for depth in range(1, len(chain)):
            parent, cell = chain[depth - 1], chain[depth]
            kids = CHILDREN[parent]
            for sibling in kids:
                if sibling == cell:
                    pred = preds.get(cell)
                    if pred is not None and not pred(w):
                        problems.append(f"vertex {w}: fails the predicate of {cell}")
                    break
                pred = preds.get(sibling)
                if pred is not None and pred(w):
                    problems.append(
                        f"vertex {w}: in {cell} but the earlier cell {sibling} claims it"
                    )

    problems.extend(_check_structure(ctx))
    return problems


def _check_structure(ctx: _Ctx) -> list[str]:
    g, lab = ctx.g, ctx.lab
    c, un = lab.cell, lab.union
    problems: list[str] = []

    for w in c("S44"):
        if not ctx.nb(w) & c("S33"):
            if not ctx.nb(w) & c("K") or not ctx.nb(w) & c("L"):
                problems.append(f"deep vertex {w} misses both escape cells")
    for w in c("M'"):
        if ctx.edge_count(w, c("S33")) != 1 or ctx.nb(w) & (c("K") | c("L")):
            problems.append(f"single-link vertex {w} has the wrong deep neighborhood")
    for w in c("S33"):
        if not ctx.nb(w) & c("S22"):
            if not ctx.nb(w) & c("I") or not ctx.nb(w) & c("J"):
                problems.append(f"middle vertex {w} misses both side cells")
    for w in c("X'"):
        if ctx.edge_count(w, c("S22")) != 1 or ctx.nb(w) & un("I", "J", "K", "L"):
            problems.append(f"single-link vertex {w} has the wrong middle neighborhood")

    kp10 = c("K'10")
    if kp10:
        problems.append(f"K'10 should be empty, has {sorted(kp10)}")
    if lab.base.gstar == 5:
        for name in ("K'6", "K'9"):
            if c(name):
                problems.append(f"{name} should be empty at edge girth 5")

    if len(c("K'")) < len(c("L'")):
        problems.append("symmetry guard violated: |K'| < |L'|")

    obs = {
        "A9": (un("B", "I1", "I2", "I3", "I4", "I5"), un("I6", "I'")),
        "B10": (un("A", "J"), c("J'")),
        "I6": (un("J", "S33", "K"), c("K'")),
        "J6": (un("I", "S33", "L"), c("L'")),
        "K3": (un("S33", "L"), c("M1")),
        "L4": (c("K"), un("S33", "M")),
    }
    for name, (banned, needed) in obs.items():
        for w in c(name):
            nb = ctx.nb(w)
            if nb & c("S22"):
                problems.append(f"{name} vertex {w} touches the center layer")
            if nb & banned:
                problems.append(f"{name} vertex {w} touches a forbidden cell")
            if not nb & needed:
                problems.append(f"{name} vertex {w} misses its required neighbor cell")

    bad_istar = lab.istar - (c("I") - c("I62"))
    if bad_istar:
        problems.append(f"path-interior set leaks outside I - I62: {sorted(bad_istar)}")
    for w in c("K'2"):
        if not ctx.nb(w) & lab.istar:
            problems.append(f"K'2 vertex {w} has no path-interior neighbor")
    return problems
