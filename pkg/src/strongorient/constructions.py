"""Orientation primitives and the staged orientation rules.

The stages run in a fixed schedule (see pipeline.SCHEDULE).  Each stage
orients a prescribed set of edges through MixedOrientation.set_direction, so
any disagreement between two rules surfaces as a ConflictError instead of
being silently overwritten.  Iterative sub-procedures visit vertices in
ascending id and re-check undirectedness where the rule demands it, which
pins down every "choose some ..." in a reproducible way:

* the designated single edge of a "one out, rest in" pattern is the lowest
  edge id among candidates;
* maximizing choices break ties by lowest vertex id;
* walk searches explore neighbors in ascending (vertex, edge) order and
  return the first qualifying walk.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .errors import ConflictError, InternalError, InvalidRs, NotFound, PreconditionError
from .graph import MultiGraph, edge_girth, multi_source_distances
from .mixed import BACKWARD, FORWARD, MixedOrientation
from .partition import FineLabels

STAGES = (
    "scaffold", "x_center", "xprime", "mprime", "b10", "bprime",
    "lprime", "jprime", "i61", "a9", "aprime", "iprime", "kprime",
)


# ---------------------------------------------------------------------------
# primitives
# ---------------------------------------------------------------------------

@dataclass
class MixedWalk:
    vertices: list[int]
    edges: list[int]
    kind: str  # "path" | "cycle"

    def steps(self) -> list[tuple[int, int, int]]:
        """(tail, head, edge) triples in listed order (closing step included)."""
        out = []
        for idx, eid in enumerate(self.edges):
            a = self.vertices[idx]
            b = self.vertices[(idx + 1) % len(self.vertices)]
            out.append((a, b, eid))
        return out


def _step_dirs(o: MixedOrientation, eid: int, tail: int, head: int) -> set[str]:
    """Which walk directions this edge permits for the listed step tail->head."""
    arc = o.arc(eid)
    if arc is None:
        return {"F", "B"}
    if arc == (tail, head):
        return {"F"}
    if arc == (head, tail):
        return {"B"}
    return set()  # pragma: no cover


def walk_directions(o: MixedOrientation, walk: MixedWalk) -> set[str]:
    dirs = {"F", "B"}
    for tail, head, eid in walk.steps():
        dirs &= _step_dirs(o, eid, tail, head)
        if not dirs:
            break
    return dirs


def orient_walk(o: MixedOrientation, walk: MixedWalk, stage: str) -> None:
    """Direct every undirected step so the whole walk runs one way.

    Forward (listed order) is preferred when both directions remain open.
    """
    dirs = {"F", "B"}
    for tail, head, eid in walk.steps():
        nd = dirs & _step_dirs(o, eid, tail, head)
        if not nd:
            raise ConflictError(eid, "fixed arc", "one-way walk", stage)
        dirs = nd
    forward = "F" in dirs
    for tail, head, eid in walk.steps():
        o.orient(eid, tail if forward else head, stage)


def find_mixed_closure(
    o: MixedOrientation,
    prefix_vertices: Sequence[int],
    prefix_edges: Sequence[int],
    step_sets: Sequence[Iterable[int]],
    *,
    close_to: int | None = None,
    accept: Callable[[list[int], set[str]], bool] | None = None,
    what: str = "walk",
) -> MixedWalk:
    """First mixed walk extending the prefix, in ascending (vertex, edge) order.

    step_sets constrains each subsequent position; close_to asks for a cycle
    back to that vertex after the last step.  accept(vertices, dirs) can
    reject a completed candidate (e.g. demand a cell membership when only the
    backward direction remains).  Raises NotFound when nothing qualifies.
    """
    g = o.base
    verts = list(prefix_vertices)
    edges = list(prefix_edges)
    dirs = {"F", "B"}
    for idx, eid in enumerate(edges):
        dirs &= _step_dirs(o, eid, verts[idx], verts[idx + 1])
    if not dirs:
        raise NotFound(f"{what}: prefix is not consistently orientable")

    step_sets = [set(s) for s in step_sets]

    def extend(dirs: set[str], idx: int) -> MixedWalk | None:
        cur = verts[-1]
        if idx == len(step_sets):
            if close_to is None:
                walk = MixedWalk(list(verts), list(edges), "path")
                if accept is None or accept(walk.vertices, dirs):
                    return walk
                return None
            for eid in sorted(g.edges_between(cur, close_to)):
                nd = dirs & _step_dirs(o, eid, cur, close_to)
                if nd:
                    walk = MixedWalk(list(verts), list(edges) + [eid], "cycle")
                    if accept is None or accept(walk.vertices, nd):
                        return walk
            return None
        for x in sorted(step_sets[idx] & g.neighbor_set(cur)):
            if x in verts:
                continue
            for eid in sorted(g.edges_between(cur, x)):
                nd = dirs & _step_dirs(o, eid, cur, x)
                if not nd:
                    continue
                verts.append(x)
                edges.append(eid)
                got = extend(nd, idx + 1)
                verts.pop()
                edges.pop()
                if got is not None:
                    return got
        return None

    walk = extend(dirs, 0)
    if walk is None:
        raise NotFound(f"{what}: no qualifying mixed walk from {list(prefix_vertices)}")
    return walk


def orient_two_ways(o: MixedOrientation, w: int, targets: Iterable[int], stage: str) -> None:
    """One edge out of w into the target set (lowest id), the rest inward."""
    g = o.base
    tset = set(targets)
    eids = [eid for eid, x in g.incident(w) if x in tset]
    if len(eids) < 2:
        raise PreconditionError(
            f"two-way orientation at {w} needs >=2 edges, found {len(eids)}"
        )
    for eid in eids:
        if o.is_directed_edge(eid):
            raise PreconditionError(f"two-way orientation at {w}: edge {eid} already directed")
    o.orient(eids[0], w, stage)
    for eid in eids[1:]:
        o.orient(eid, g.other_end(eid, w), stage)


def rs_orient(o: MixedOrientation, r_set: Iterable[int], s_set: Iterable[int],
              stage: str) -> tuple[set[int], set[int]]:
    """Two-set orientation: R -> side1 -> side2 -> R over a spanning forest of G[S].

    Guarantees theta(w, R) <= 2 for every w in S.  The forest is the BFS
    forest of G[S] rooted at each component's lowest vertex (roots on side1);
    non-forest edges inside G[S] are left untouched.
    """
    g = o.base
    R, S = set(r_set), set(s_set)
    if not S:
        return set(), set()
    if R & S:
        raise InvalidRs(f"R and S overlap: {sorted(R & S)}")
    for w in S:
        nb = g.neighbor_set(w)
        if not nb & (S - {w}):
            raise InvalidRs(f"vertex {w} is isolated inside S")
        if not nb & R:
            raise InvalidRs(f"vertex {w} in S has no neighbor in R")

    side = {}
    forest_edges: list[tuple[int, int]] = []  # (edge, tail on side1/2 order)
    for root in sorted(S):
        if root in side:
            continue
        side[root] = 0
        queue = [root]
        while queue:
            y = queue.pop(0)
            for x in sorted(g.neighbor_set(y) & S):
                if x in side:
                    continue
                side[x] = side[y] ^ 1
                tree_eid = min(g.edges_between(y, x))
                forest_edges.append((tree_eid, y))
                queue.append(x)
    v1 = {w for w in S if side[w] == 0}
    v2 = S - v1

    for eid in g.edge_set_between(R, v1):
        a, b = g.ends[eid]
        o.orient(eid, a if a in R else b, stage)
    for eid, tail in forest_edges:
        tail_side1 = tail if tail in v1 else g.other_end(eid, tail)
        o.orient(eid, tail_side1, stage)
    for eid in g.edge_set_between(v2, R):
        a, b = g.ends[eid]
        o.orient(eid, a if a in v2 else b, stage)
    return v1, v2


def _u_to_v(o: MixedOrientation, us: Iterable[int], vs: Iterable[int], stage: str) -> None:
    """Orient every edge between the two (disjoint) sets from us into vs."""
    uset, vset = set(us), set(vs)
    if not uset or not vset:
        return
    if uset & vset:
        raise InternalError(f"overlapping rule sets at stage {stage}: {sorted(uset & vset)}")
    g = o.base
    for eid, (a, b) in enumerate(g.ends):
        if a in uset and b in vset:
            o.set_direction(eid, FORWARD, stage)
        elif b in uset and a in vset:
            o.set_direction(eid, BACKWARD, stage)


def _orient_by_rank(o: MixedOrientation, cells: Sequence[Iterable[int]],
                    low_to_high: bool, stage: str) -> None:
    """Orient edges between distinct cells of one family by cell rank."""
    rank: dict[int, int] = {}
    for idx, cell in enumerate(cells):
        for v in cell:
            rank[v] = idx
    g = o.base
    for eid, (a, b) in enumerate(g.ends):
        ra, rb = rank.get(a), rank.get(b)
        if ra is None or rb is None or ra == rb:
            continue
        tail_is_a = (ra < rb) == low_to_high
        o.set_direction(eid, FORWARD if tail_is_a else BACKWARD, stage)


def _edges_into(o: MixedOrientation, w: int, sources: Iterable[int], stage: str) -> None:
    g = o.base
    src = set(sources)
    for eid, x in g.incident(w):
        if x in src:
            o.orient(eid, x, stage)


def _edges_out(o: MixedOrientation, w: int, targets: Iterable[int], stage: str) -> None:
    g = o.base
    tgt = set(targets)
    for eid, x in g.incident(w):
        if x in tgt:
            o.orient(eid, w, stage)


def _one_in_rest_out(o: MixedOrientation, w: int, in_targets: Iterable[int],
                     all_targets: Iterable[int], stage: str) -> None:
    """Lowest edge from w into in_targets comes in, every other edge of
    [w, all_targets] goes out."""
    g = o.base
    iset, aset = set(in_targets), set(all_targets)
    eids = [eid for eid, x in g.incident(w) if x in iset]
    if not eids:
        raise NotFound(f"vertex {w}: no edge into the designated in-set")
    chosen = min(eids)
    o.orient(chosen, g.other_end(chosen, w), stage)
    for eid, x in g.incident(w):
        if eid != chosen and x in aset:
            o.orient(eid, w, stage)


def _one_out_rest_in(o: MixedOrientation, w: int, out_targets: Iterable[int],
                     all_targets: Iterable[int], stage: str) -> None:
    g = o.base
    oset, aset = set(out_targets), set(all_targets)
    eids = [eid for eid, x in g.incident(w) if x in oset]
    if not eids:
        raise NotFound(f"vertex {w}: no edge into the designated out-set")
    chosen = min(eids)
    o.orient(chosen, w, stage)
    for eid, x in g.incident(w):
        if eid != chosen and x in aset:
            o.orient(eid, g.other_end(eid, w), stage)


def _girth_cycle(o: MixedOrientation, g: MultiGraph, a: int, b: int, stage: str,
                 allowed_lengths=(2, 4, 5)) -> MixedWalk:
    """First mixed cycle through the lowest a-b edge of shortest-cycle length."""
    eid = min(g.edges_between(a, b))
    r = edge_girth(g, eid)
    if r not in allowed_lengths:
        raise InternalError(
            f"stage {stage}: edge {eid} ({a},{b}) lies on a shortest cycle of "
            f"length {r}, expected one of {allowed_lengths}"
        )
    if r == 2:
        partner = [e for e in g.edges_between(a, b) if e != eid]
        return MixedWalk([a, b], [eid, min(partner)], "cycle")
    everything = range(g.n)
    return find_mixed_closure(
        o, [a, b], [eid], [everything] * (int(r) - 2), close_to=a,
        what=f"{stage}: cycle of length {int(r)} through ({a},{b})",
    )


# ---------------------------------------------------------------------------
# stages
# ---------------------------------------------------------------------------

def apply_stage(o: MixedOrientation, g: MultiGraph, labels: FineLabels,
                stage: str) -> None:
    try:
        fn = _STAGE_FNS[stage]
    except KeyError:
        raise ValueError(f"unknown stage {stage!r}") from None
    fn(o, g, labels)


def _stage_scaffold(o: MixedOrientation, g: MultiGraph, lab: FineLabels) -> None:
    """Bulk arc pattern between the coarse cells, plus the in-family ranks."""
    t = "scaffold"
    c, un = lab.cell, lab.union
    u, v = lab.base.u, lab.base.v
    o.orient(lab.base.e, u, t)

    A, B, I, J, K, L, M = c("A"), c("B"), c("I"), c("J"), c("K"), c("L"), c("M")
    s22, s33 = c("S22"), c("S33")
    Lp = c("L'")
    _u_to_v(o, B, A | J, t)
    _u_to_v(o, B | J, s22, t)
    _u_to_v(o, s22, A | I, t)
    _u_to_v(o, J, I | s33, t)
    _u_to_v(o, L, s33 | K | M, t)
    _u_to_v(o, s33, K | I, t)
    _u_to_v(o, M, K, t)
    _u_to_v(o, K, I, t)

    l3 = c("L3")
    _u_to_v(o, J, un("L1", "L2", "L4"), t)
    lp_near_l3 = {x for x in Lp if g.neighbor_set(x) & l3}
    _u_to_v(o, J, lp_near_l3, t)
    _u_to_v(o, Lp, l3, t)
    _u_to_v(o, J - c("J1"), l3, t)
    _u_to_v(o, l3, c("J1"), t)

    _u_to_v(o, un("I1", "I2", "I3", "I4", "I5"), A, t)
    _u_to_v(o, un(*(f"A{i}" for i in range(1, 9))), {u}, t)
    _u_to_v(o, {v}, un(*(f"B{i}" for i in range(1, 10))), t)

    _orient_by_rank(o, [c(f"A{i}") for i in range(1, 9)], True, t)
    _orient_by_rank(o, [c(f"B{i}") for i in range(1, 10)], False, t)
    _orient_by_rank(o, [c(f"I{i}") for i in range(1, 6)], True, t)
    _orient_by_rank(o, [c(f"J{i}") for i in range(1, 6)], False, t)
    _orient_by_rank(o, [c("K1"), c("K2"), c("K3")], True, t)
    _orient_by_rank(o, [c(f"L{i}") for i in range(1, 5)], False, t)


def _stage_x_center(o: MixedOrientation, g: MultiGraph, lab: FineLabels) -> None:
    """Orient the [X, S22] edges by the neighborhood case analysis."""
    t = "x_center"
    c = lab.cell
    s22 = c("S22")
    I, J = c("I"), c("J")
    k_m1 = c("K") | c("M1")
    for w in sorted(c("X")):
        eids = [eid for eid, x in g.incident(w) if x in s22]
        if len(eids) >= 2:
            orient_two_ways(o, w, s22, t)
            continue
        if not eids:
            continue
        nb = g.neighbor_set(w)
        if nb & J:
            o.orient(eids[0], w, t)
        elif nb & I:
            o.orient(eids[0], g.other_end(eids[0], w), t)
        elif nb & k_m1:
            o.orient(eids[0], g.other_end(eids[0], w), t)
            _edges_out(o, w, k_m1, t)
        else:
            o.orient(eids[0], w, t)


def _stage_xprime(o: MixedOrientation, g: MultiGraph, lab: FineLabels) -> None:
    t = "xprime"
    c, un = lab.cell, lab.union
    s22, s33, s44 = c("S22"), c("S33"), c("S44")
    _u_to_v(o, c("M2"), c("X'2"), t)
    _u_to_v(o, c("X'2"), s22, t)
    _u_to_v(o, s22, c("X'1"), t)
    _u_to_v(o, c("X'1"), c("M1"), t)
    _u_to_v(o, c("X"), c("X'3"), t)
    _u_to_v(o, c("X'3"), s22, t)
    rs_orient(o, s22, c("X'5"), t)

    xp123 = un("X'1", "X'2", "X'3")
    deep = c("M'") | c("M3")
    mid = s22 | c("I") | c("J")
    for w in sorted(c("X'4")):
        if not o.is_undirected_vertex(w):
            continue
        nb = g.neighbor_set(w)
        if nb & xp123:
            if nb & c("X'1"):
                _edges_into(o, w, c("X'1"), t)
                _edges_out(o, w, s22, t)
            else:
                _edges_into(o, w, s22, t)
                _edges_out(o, w, un("X'2", "X'3"), t)
            continue
        s22_edges = [eid for eid, x in g.incident(w) if x in s22]
        if len(s22_edges) != 1 or not nb & deep:
            raise InternalError(f"xprime: vertex {w} lacks the expected neighborhood")
        w0 = g.other_end(s22_edges[0], w)
        cands = sorted(nb & deep, key=lambda x: (-len(g.neighbor_set(x) & s33), x))
        w1 = cands[0]
        if len(g.neighbor_set(w1) & s33) < 2 and lab.base.gstar != 5:
            raise InternalError(
                f"xprime: vertex {w} requires a girth-5 detour with edge girth 4"
            )
        if len(g.neighbor_set(w1) & s33) >= 2:
            prefix_v = [w0, w, w1]
            prefix_e = [s22_edges[0], min(g.edges_between(w, w1))]
            inner = (g.neighbor_set(w1) & s33) - {w}
            try:
                walk = find_mixed_closure(o, prefix_v, prefix_e, [inner, mid],
                                          what="xprime: 4-step walk")
            except NotFound:
                walk = find_mixed_closure(o, prefix_v, prefix_e, [inner],
                                          close_to=w0, what="xprime: 4-cycle")
        else:
            # the walk may cross the other deep ranks only in the direction
            # the next stage prescribes in bulk for their middle-layer edges
            m1, m2 = c("M1"), c("M2")

            def _deep_rank_ok(vs: list[int], dirs: set[str]) -> bool:
                y2 = vs[3]
                eff = "F" if "F" in dirs else "B"
                if y2 in m1:
                    return eff == "B"
                if y2 in m2:
                    return eff == "F"
                return True

            try:
                walk = find_mixed_closure(
                    o, [w0, w], [s22_edges[0]], [nb & deep, s44, s33],
                    close_to=w0, accept=_deep_rank_ok, what="xprime: girth cycle")
            except NotFound:
                walk = find_mixed_closure(
                    o, [w0, w], [s22_edges[0]], [nb & deep, s44, s33, mid],
                    accept=_deep_rank_ok, what="xprime: girth path")
        orient_walk(o, walk, t)


def _stage_mprime(o: MixedOrientation, g: MultiGraph, lab: FineLabels) -> None:
    t = "mprime"
    c = lab.cell
    s33 = c("S33")
    _u_to_v(o, c("M2"), c("X") | c("X'1"), t)
    _u_to_v(o, c("X"), c("M1"), t)
    _u_to_v(o, c("M"), c("M'21"), t)
    _u_to_v(o, c("M'21"), s33, t)
    _u_to_v(o, s33, c("M'22"), t)
    _u_to_v(o, c("M'22"), c("M'1") | c("M'21"), t)
    for w in sorted(c("M32")):
        orient_two_ways(o, w, s33, t)
    rs_orient(o, s33, c("M'23"), t)


def _stage_b10(o: MixedOrientation, g: MultiGraph, lab: FineLabels) -> None:
    t = "b10"
    c = lab.cell
    v = lab.base.v
    rs_orient(o, {v}, c("B10_2"), t)
    b_all = c("B") | c("B'")
    b10 = c("B10")
    for w in sorted(c("B10_1")):
        if not o.is_undirected_vertex(w):
            continue
        others = (g.neighbor_set(w) & b_all) - b10
        if others:
            for x in sorted(others):
                for eid in g.edges_between(v, x):
                    o.orient(eid, v, t)
                for eid in g.edges_between(x, w):
                    o.orient(eid, x, t)
            for eid in g.edges_between(w, v):
                o.orient(eid, w, t)
            continue
        walk = _girth_cycle(o, g, v, w, t)
        orient_walk(o, walk, t)


def _stage_bprime(o: MixedOrientation, g: MultiGraph, lab: FineLabels) -> None:
    t = "bprime"
    c = lab.cell
    v = lab.base.v
    rs_orient(o, {v}, c("B'3"), t)
    B = c("B")
    for w in sorted(c("B'2")):
        if not o.is_undirected_vertex(w):
            continue
        nb = g.neighbor_set(w)
        if nb & c("B'"):
            feeders = nb & c("B'1")
            if not feeders:
                raise InternalError(f"bprime: {w} has only un-touched B' neighbors")
            _edges_into(o, w, feeders, t)
            _edges_out(o, w, {v}, t)
            continue
        v_edges = g.edges_between(w, v)
        if len(v_edges) >= 2:
            orient_two_ways(o, w, {v}, t)
            continue
        walk = find_mixed_closure(o, [v, w], [v_edges[0]], [nb & B],
                                  close_to=v, what="bprime: 3-cycle")
        orient_walk(o, walk, t)


def _stage_lprime(o: MixedOrientation, g: MultiGraph, lab: FineLabels) -> None:
    t = "lprime"
    c, un = lab.cell, lab.union
    Lp, Kp = c("L'"), c("K'")
    if not Lp:
        return
    _u_to_v(o, un("J5", "J6"), Lp, t)
    hubs = un("L'11", "L'13", "L'2")
    _u_to_v(o, c("J"), hubs, t)
    _u_to_v(o, hubs, c("L"), t)
    _u_to_v(o, c("L2"), c("L'12"), t)
    _u_to_v(o, c("L'12"), c("J1"), t)
    _u_to_v(o, c("J"), un("L'51", "L'42"), t)
    _u_to_v(o, un("L'51", "L'42"), c("L'41"), t)
    _u_to_v(o, c("L'41"), c("J1"), t)
    sinks = un("J1", "J2", "J3", "J4") | un("L'11", "L'12")
    _u_to_v(o, c("L'51"), c("L'52"), t)
    _u_to_v(o, c("L'52"), c("L'53"), t)
    _u_to_v(o, c("L'53"), sinks, t)
    _u_to_v(o, c("L'52"), sinks, t)

    j14 = un("J1", "J2", "J3", "J4")
    dk = multi_source_distances(g, Kp)
    for w in sorted(c("L'3")):
        nb = g.neighbor_set(w)
        first_steps = {x for x in nb if dk[x] == dk[w] - 1}
        if nb & Lp:
            if first_steps & j14 and nb & hubs:
                _edges_into(o, w, hubs, t)
                _edges_out(o, w, j14, t)
            elif first_steps & j14 and nb & c("L'12"):
                _edges_into(o, w, j14, t)
                _edges_out(o, w, c("L'12"), t)
            elif first_steps & c("L'1"):
                _edges_into(o, w, c("J"), t)
                _edges_out(o, w, c("L'1"), t)
            else:
                raise NotFound(f"lprime: no applicable rule at vertex {w}")
        elif nb & c("L"):
            if not nb & c("L4") or not nb & j14:
                raise InternalError(f"lprime: {w} lacks the expected L4/J neighbors")
            _edges_into(o, w, c("L4"), t)
            _edges_out(o, w, j14, t)
        else:
            _one_out_rest_in(o, w, j14, c("J"), t)
    rs_orient(o, c("J1"), c("L'43"), t)
    rs_orient(o, j14, c("L'54"), t)


def _stage_jprime(o: MixedOrientation, g: MultiGraph, lab: FineLabels) -> None:
    t = "jprime"
    c, un = lab.cell, lab.union
    b_low = un(*(f"B{i}" for i in range(1, 7)))
    b_high = un("B7", "B8", "B9", "B10")
    j_high = un("J4", "J5", "J6")
    _u_to_v(o, c("B"), c("J'2"), t)
    _u_to_v(o, c("J'2"), c("J"), t)
    _u_to_v(o, un("B8", "B9"), c("J'1"), t)
    _u_to_v(o, c("J'62"), b_high, t)
    _u_to_v(o, b_high, c("J'61"), t)
    _u_to_v(o, c("J'61"), un("J'51", "J'62"), t)
    _u_to_v(o, b_low, c("J'52"), t)
    _u_to_v(o, c("J'52"), c("J'51"), t)
    _u_to_v(o, c("J'51"), b_low, t)
    _u_to_v(o, j_high, c("J'31"), t)
    _u_to_v(o, c("J'31"), b_low, t)
    _u_to_v(o, c("B"), c("J'32"), t)
    _u_to_v(o, c("J'32"), j_high, t)
    _u_to_v(o, un("J'32", "J'42", "J'6"),
            un("J'1", "J'2", "J'31", "J'41", "J'5"), t)
    rs_orient(o, b_low, c("J'53"), t)
    rs_orient(o, b_high, c("J'63"), t)

    jp123 = un("J'1", "J'2", "J'3")
    for w in sorted(c("J'4")):
        nb = g.neighbor_set(w)
        if nb & c("J'"):
            if w in c("J'41"):
                _edges_into(o, w, jp123, t)
                _edges_out(o, w, b_low, t)
            else:
                _edges_into(o, w, b_high, t)
                _edges_out(o, w, jp123, t)
        elif w in c("J'41"):
            _one_out_rest_in(o, w, b_low, c("B"), t)
        else:
            orient_two_ways(o, w, c("B"), t)


def _stage_i61(o: MixedOrientation, g: MultiGraph, lab: FineLabels) -> None:
    t = "i61"
    c, un = lab.cell, lab.union
    a123 = un("A1", "A2", "A3")
    A, I, Ip = c("A"), c("I"), c("I'")
    i6 = c("I6")
    _u_to_v(o, a123, c("I61_1"), t)
    _u_to_v(o, c("I61_1"), c("I62"), t)
    rs_orient(o, a123, c("I61_3"), t)

    for w in sorted(c("I61_2")):
        if not o.is_undirected_vertex(w):
            continue
        nb = g.neighbor_set(w)
        if nb & (I | Ip):
            targets = nb & ((I - i6) | Ip | c("I61_1"))
            if not targets:
                raise InternalError(f"i61: {w} has I-neighbors but no forward target")
            _edges_into(o, w, a123, t)
            _edges_out(o, w, targets, t)
            for x in sorted(targets & ((I - i6) | Ip)):
                _edges_out(o, x, A, t)
            continue
        a_edges = [eid for eid, x in g.incident(w) if x in A]
        if len(a_edges) >= 2:
            _one_in_rest_out(o, w, a123, A, t)
            continue
        w0 = g.other_end(a_edges[0], w)
        if w0 not in a123:
            raise InternalError(f"i61: single A-edge of {w} misses the feeder cells")
        kn = nb & c("K'")
        if not kn:
            raise InternalError(f"i61: {w} has no deep neighbor to route through")
        cands = sorted(kn, key=lambda x: (-len(g.neighbor_set(x) & I), x))
        w1 = cands[0]

        def _accept(vs: list[int], dirs: set[str]) -> bool:
            return "F" in dirs or vs[-1] in a123

        if len(g.neighbor_set(w1) & I) < 2 and lab.base.gstar != 5:
            raise InternalError(
                f"i61: vertex {w} requires a girth-5 detour with edge girth 4"
            )
        if len(g.neighbor_set(w1) & I) >= 2:
            prefix_v = [w0, w, w1]
            prefix_e = [a_edges[0], min(g.edges_between(w, w1))]
            inner = (g.neighbor_set(w1) & I) - {w}
            try:
                walk = find_mixed_closure(o, prefix_v, prefix_e, [inner, A],
                                          accept=_accept, what="i61: 4-step walk")
            except NotFound:
                walk = find_mixed_closure(o, prefix_v, prefix_e, [inner],
                                          close_to=w0, what="i61: 4-cycle")
        else:
            s34 = c("S34")
            try:
                walk = find_mixed_closure(o, [w0, w], [a_edges[0]], [kn, s34, I],
                                          close_to=w0, what="i61: girth cycle")
            except NotFound:
                walk = find_mixed_closure(o, [w0, w], [a_edges[0]], [kn, s34, I, A],
                                          accept=_accept, what="i61: girth path")
        orient_walk(o, walk, t)


def _stage_a9(o: MixedOrientation, g: MultiGraph, lab: FineLabels) -> None:
    t = "a9"
    c, un = lab.cell, lab.union
    u = lab.base.u
    a123 = un("A1", "A2", "A3")
    A, Ap = c("A"), c("A'")
    a_safe = A - c("A94") - c("A95")
    i61, i62 = c("I61"), c("I62")
    _u_to_v(o, a123, c("I61_1"), t)
    _u_to_v(o, c("I61_1"), c("I62_1"), t)
    _u_to_v(o, c("I62_1"), a_safe, t)
    _u_to_v(o, a_safe, {u}, t)
    _u_to_v(o, i61 - c("I61_22"), c("I'2"), t)
    _u_to_v(o, (c("I") - i62), un("I'1", "I'2"), t)
    _u_to_v(o, un("I'1", "I'2"), a_safe, t)
    _u_to_v(o, i61 | c("I62_1") | c("I62_2"), c("A93"), t)
    rs_orient(o, {u}, c("A95"), t)

    keep = (A | Ap) - c("A94") - c("A95")
    for w in sorted(c("A94")):
        if not o.is_undirected_vertex(w):
            continue
        xs = g.neighbor_set(w) & keep
        if xs:
            for eid in g.edges_between(u, w):
                o.orient(eid, u, t)
            for x in sorted(xs):
                for eid in g.edges_between(w, x):
                    o.orient(eid, w, t)
                for eid in g.edges_between(x, u):
                    o.orient(eid, x, t)
            continue
        walk = _girth_cycle(o, g, u, w, t)
        orient_walk(o, walk, t)


def _stage_aprime(o: MixedOrientation, g: MultiGraph, lab: FineLabels) -> None:
    t = "aprime"
    c = lab.cell
    u = lab.base.u
    rs_orient(o, {u}, c("A'3"), t)
    for w in sorted(c("A'2")):
        if not o.is_undirected_vertex(w):
            continue
        nb = g.neighbor_set(w)
        if nb & c("A'"):
            feeders = nb & c("A'1")
            if not feeders:
                raise InternalError(f"aprime: {w} has only un-touched A' neighbors")
            for eid in g.edges_between(u, w):
                o.orient(eid, u, t)
            _edges_out(o, w, feeders, t)
            for x in sorted(feeders):
                for eid in g.edges_between(x, u):
                    o.orient(eid, x, t)
            continue
        u_edges = g.edges_between(w, u)
        if len(u_edges) >= 2:
            orient_two_ways(o, w, {u}, t)
            continue
        walk = find_mixed_closure(o, [u, w], [u_edges[0]], [nb & c("A")],
                                  close_to=u, what="aprime: 3-cycle")
        orient_walk(o, walk, t)


def _stage_iprime(o: MixedOrientation, g: MultiGraph, lab: FineLabels) -> None:
    t = "iprime"
    c, un = lab.cell, lab.union
    A, I = c("A"), c("I")
    a16 = un("A1", "A2", "A3", "A4", "A5", "A6")
    a14 = un("A1", "A2", "A3", "A4")
    a59 = un("A5", "A6", "A7", "A8", "A9")
    a79 = un("A7", "A8", "A9")
    i62_3 = c("I62_3")
    _u_to_v(o, a16, un("I'41", "I'51"), t)
    _u_to_v(o, un("I'41", "I'51"), I, t)
    _u_to_v(o, a79, c("I'52"), t)
    _u_to_v(o, c("I'52"), I, t)
    _u_to_v(o, I - i62_3, c("I'42"), t)
    _u_to_v(o, c("I'42"), A | i62_3, t)
    _u_to_v(o, a14, c("I'71"), t)
    _u_to_v(o, c("I'71"), c("I'81"), t)
    _u_to_v(o, c("I'81"), A, t)
    _u_to_v(o, c("I'71"), c("I'72"), t)
    _u_to_v(o, c("I'72"), a14, t)
    _u_to_v(o, a59, c("I'82"), t)
    _u_to_v(o, c("I'82"), c("I'81"), t)
    late = un("I62_32", "I62_33")
    _u_to_v(o, un("I'1", "I'2", "I'3") | (I - c("I6")), late, t)
    _u_to_v(o, late, A, t)
    _u_to_v(o, un("I'1", "I'2", "I'3", "I'4", "I'51", "I'61", "I'7"),
            un("I'52", "I'62", "I'8"), t)
    rs_orient(o, a14, c("I'73"), t)
    rs_orient(o, a59, c("I'83"), t)

    ip_low = un("I'1", "I'2", "I'3", "I'4", "I'5")
    feeders = un("I'1", "I'2", "I'3", "I'4", "I'51")
    for w in sorted(c("I'6")):
        nb = g.neighbor_set(w)
        if nb & c("I'"):
            if w in c("I'61"):
                _edges_into(o, w, a16, t)
                _edges_out(o, w, ip_low, t)
            elif nb & feeders:
                _edges_into(o, w, feeders, t)
                _edges_out(o, w, A, t)
            else:
                _edges_into(o, w, a79, t)
                _edges_out(o, w, c("I'52"), t)
        elif w in c("I'61"):
            _one_in_rest_out(o, w, a16, A, t)
        else:
            orient_two_ways(o, w, A, t)


def _stage_kprime(o: MixedOrientation, g: MultiGraph, lab: FineLabels) -> None:
    t = "kprime"
    c, un = lab.cell, lab.union
    I, K, Kp = c("I"), c("K"), c("K'")
    i62_3 = c("I62_3")
    i_early = I - i62_3
    i_mid = un("I62_31", "I62_32")
    istar = lab.istar
    _u_to_v(o, Kp, c("I62_33"), t)
    _u_to_v(o, istar, c("K'21"), t)
    _u_to_v(o, c("K'1") | c("K'21"), c("K'3"), t)
    _u_to_v(o, c("K'3"), I, t)
    _u_to_v(o, K, c("K'2") | c("K'3"), t)
    _u_to_v(o, K, c("K'4"), t)
    _u_to_v(o, c("K'4"), I, t)
    _u_to_v(o, i_early, c("K'5"), t)
    _u_to_v(o, i_mid, c("K'6"), t)
    _u_to_v(o, i_early, c("K'81"), t)
    _u_to_v(o, c("K'81"), c("K'91"), t)
    _u_to_v(o, c("K'91"), i_mid, t)
    _u_to_v(o, c("K'81"), c("K'82"), t)
    _u_to_v(o, c("K'82"), i_early, t)
    _u_to_v(o, i_mid, c("K'92"), t)
    _u_to_v(o, c("K'92"), c("K'91"), t)

    for w in sorted(c("K'22")):
        nb = g.neighbor_set(w)
        if nb & Kp:
            if nb & c("K'1"):
                _edges_into(o, w, istar, t)
                _edges_out(o, w, c("K'1"), t)
            else:
                _edges_into(o, w, c("K'21"), t)
                _edges_out(o, w, istar, t)
        elif nb & K:
            _edges_into(o, w, K, t)
            _edges_out(o, w, istar, t)
        else:
            _one_in_rest_out(o, w, istar, I, t)

    mids = un("K'3", "K'4", "K'5", "K'6")
    for w in sorted(c("K'7")):
        nb = g.neighbor_set(w)
        if nb & Kp:
            _edges_into(o, w, I - c("I62_33"), t)
            _edges_out(o, w, mids, t)
        elif nb & i_early:
            _one_in_rest_out(o, w, i_early, I, t)
        else:
            orient_two_ways(o, w, I, t)

    rs_orient(o, istar, c("K'23"), t)
    rs_orient(o, i_early, c("K'83"), t)
    rs_orient(o, i_mid, c("K'93"), t)

    for eid in o.undirected_edges():
        a, b = g.ends[eid]
        o.orient(eid, min(a, b), "leftovers")


_STAGE_FNS = {
    "scaffold": _stage_scaffold,
    "x_center": _stage_x_center,
    "xprime": _stage_xprime,
    "mprime": _stage_mprime,
    "b10": _stage_b10,
    "bprime": _stage_bprime,
    "lprime": _stage_lprime,
    "jprime": _stage_jprime,
    "i61": _stage_i61,
    "a9": _stage_a9,
    "aprime": _stage_aprime,
    "iprime": _stage_iprime,
    "kprime": _stage_kprime,
}
