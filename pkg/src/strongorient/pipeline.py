"""End-to-end orientation pipeline and the per-cell distance verifier.

orient_diameter4 checks preconditions, computes the partition, runs the stage
schedule with its four refinement checkpoints, and verifies the result:
strongness, the directed-diameter bound (edge girth + 13), the exact base
distances, and one distance-bound row per finest partition cell.  The row
table is data, not code, so it can be audited line by line; each entry is
(a, b) meaning "at most a + b * edge_girth".
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .constructions import apply_stage
from .errors import (
    ConflictError,
    ConstructionFailure,
    InternalError,
    InvalidRs,
    NotFound,
    PreconditionError,
)
from .graph import MultiGraph, find_bridges, is_connected
from .mixed import MixedOrientation
from .partition import (
    BaseEdge,
    FineLabels,
    coarse_refine,
    layer_partition,
    select_base_edge,
    static_refine,
    staged_refine,
)

INF = math.inf

SCHEDULE = (
    "scaffold", "x_center", "xprime", "@D1", "mprime", "b10", "@D2",
    "bprime", "lprime", "jprime", "i61", "@D3", "a9", "@D4",
    "aprime", "iprime", "kprime",
)

# finest cell -> ((a, b), (c, d)): distance to u <= a + b*g, distance from
# v <= c + d*g, where g is the edge girth of the base edge.
BOUND_ROWS: dict[str, tuple[tuple[int, int], tuple[int, int]]] = {
    "A1": ((1, 0), (2, 0)), "A2": ((1, 0), (3, 0)), "A3": ((1, 0), (3, 0)),
    "A4": ((1, 0), (4, 0)), "A5": ((1, 0), (5, 0)), "A6": ((1, 0), (5, 0)),
    "A7": ((1, 0), (6, 0)), "A8": ((1, 0), (7, 0)),
    "A91": ((1, 0), (6, 0)), "A92": ((1, 0), (7, 0)), "A93": ((1, 0), (3, 1)),
    "A94": ((-1, 1), (-2, 2)), "A95": ((2, 0), (1, 1)),
    "A'1": ((2, 0), (1, 1)), "A'2": ((2, 0), (1, 1)), "A'3": ((2, 0), (1, 1)),
    "B1": ((2, 0), (1, 0)), "B2": ((3, 0), (1, 0)), "B3": ((3, 0), (1, 0)),
    "B4": ((4, 0), (1, 0)), "B5": ((5, 0), (1, 0)), "B6": ((5, 0), (1, 0)),
    "B7": ((6, 0), (1, 0)), "B8": ((9, 0), (1, 0)), "B9": ((8, 0), (1, 0)),
    "B10_1": ((-2, 2), (-1, 1)), "B10_2": ((1, 1), (2, 0)),
    "B'1": ((1, 1), (2, 0)), "B'2": ((1, 1), (2, 0)), "B'3": ((1, 1), (2, 0)),
    "I1": ((2, 0), (3, 0)), "I2": ((2, 0), (4, 0)), "I3": ((2, 0), (4, 0)),
    "I4": ((2, 0), (5, 0)), "I5": ((2, 0), (6, 0)),
    "I61_1": ((3, 0), (4, 0)), "I61_21": ((0, 1), (4, 0)),
    "I61_22": ((2, 0), (2, 1)), "I61_3": ((3, 0), (5, 0)),
    "I62_1": ((2, 0), (5, 0)), "I62_2": ((2, 0), (2, 1)),
    "I62_31": ((-2, 1), (-3, 2)), "I62_32": ((0, 1), (3, 1)),
    "I62_33": ((0, 1), (9, 0)),
    "I'1": ((2, 0), (5, 0)), "I'2": ((2, 0), (6, 0)), "I'3": ((-2, 1), (-3, 2)),
    "I'41": ((1, 1), (6, 0)), "I'42": ((0, 1), (3, 1)),
    "I'51": ((1, 1), (6, 0)), "I'52": ((1, 1), (4, 1)),
    "I'61": ((2, 1), (6, 0)), "I'62": ((2, 1), (4, 1)),
    "I'71": ((1, 1), (6, 0)), "I'72": ((1, 1), (6, 0)), "I'73": ((1, 1), (6, 0)),
    "I'81": ((1, 1), (5, 1)), "I'82": ((1, 1), (5, 1)), "I'83": ((1, 1), (5, 1)),
    "J1": ((3, 0), (2, 0)), "J2": ((4, 0), (2, 0)), "J3": ((4, 0), (2, 0)),
    "J4": ((5, 0), (2, 0)), "J5": ((8, 0), (2, 0)), "J6": ((7, 0), (2, 0)),
    "J'1": ((-3, 2), (-2, 1)), "J'2": ((5, 0), (0, 1)),
    "J'31": ((6, 0), (3, 0)), "J'32": ((9, 0), (0, 1)),
    "J'41": ((6, 0), (1, 1)), "J'42": ((10, 0), (0, 1)),
    "J'51": ((7, 0), (1, 1)), "J'52": ((7, 0), (1, 1)), "J'53": ((7, 0), (1, 1)),
    "J'61": ((11, 0), (1, 1)), "J'62": ((11, 0), (1, 1)), "J'63": ((11, 0), (1, 1)),
    "K1": ((3, 0), (4, 0)), "K2": ((3, 0), (5, 0)), "K3": ((3, 0), (5, 0)),
    "K'1": ((-1, 1), (1, 1)),
    "K'21": ((2, 1), (8, 0)), "K'22": ((2, 1), (8, 0)), "K'23": ((2, 1), (8, 0)),
    "K'3": ((1, 1), (8, 0)), "K'4": ((1, 1), (6, 0)), "K'5": ((1, 1), (3, 1)),
    "K'6": ((5, 0), (8, 0)), "K'7": ((2, 1), (8, 0)),
    "K'81": ((2, 1), (4, 1)), "K'82": ((2, 1), (4, 1)), "K'83": ((2, 1), (4, 1)),
    "K'91": ((2, 1), (9, 0)), "K'92": ((2, 1), (9, 0)), "K'93": ((2, 1), (9, 0)),
    "L1": ((4, 0), (3, 0)), "L2": ((5, 0), (3, 0)), "L3": ((4, 0), (4, 0)),
    "L4": ((7, 0), (3, 0)),
    "L'11": ((7, 0), (4, 0)), "L'12": ((7, 0), (4, 0)), "L'13": ((7, 0), (4, 0)),
    "L'2": ((7, 0), (4, 0)), "L'3": ((7, 0), (4, 0)),
    "L'41": ((7, 0), (4, 0)), "L'42": ((7, 0), (4, 0)), "L'43": ((7, 0), (4, 0)),
    "L'51": ((7, 0), (4, 0)), "L'52": ((7, 0), (4, 0)), "L'53": ((7, 0), (4, 0)),
    "L'54": ((7, 0), (4, 0)),
    "M1": ((4, 0), (4, 0)), "M2": ((6, 0), (5, 0)),
    "M31": ((0, 1), (0, 1)), "M32": ((2, 1), (7, 0)),
    "M'1": ((0, 1), (0, 1)),
    "M'21": ((3, 1), (8, 0)), "M'22": ((3, 1), (8, 0)), "M'23": ((3, 1), (8, 0)),
    "X'1": ((5, 0), (3, 0)), "X'2": ((3, 0), (6, 0)), "X'3": ((3, 0), (6, 0)),
    "X'4": ((1, 1), (1, 1)), "X'5": ((4, 0), (4, 0)),
}

ISTAR_ROW = ((4, 0), (6, 0))


@dataclass
class VerificationReport:
    n: int
    m: int
    gstar: int
    base: BaseEdge
    strong: bool
    directed_diameter: float
    bound: int
    bound_ok: bool
    exact_failures: list[str]
    cell_violations: list[dict]
    dist_to_u: list[float]
    dist_from_v: list[float]
    stage_log_summary: list[tuple[str, int]]

    @property
    def ok(self) -> bool:
        return (self.strong and self.bound_ok and not self.exact_failures
                and not self.cell_violations)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "gstar": self.gstar,
            "base_edge": {"u": self.base.u, "v": self.base.v, "e": self.base.e},
            "strong": self.strong,
            "directed_diameter": (
                None if self.directed_diameter is INF else int(self.directed_diameter)
            ),
            "bound": self.bound,
            "bound_ok": self.bound_ok,
            "exact_failures": list(self.exact_failures),
            "cell_violations": list(self.cell_violations),
            "stage_log_summary": [
                {"stage": s, "edges": c} for s, c in self.stage_log_summary
            ],
        }


@dataclass
class PipelineResult:
    orientation: MixedOrientation
    labels: FineLabels
    base: BaseEdge
    report: VerificationReport = field(default=None)  # type: ignore[assignment]


def build_labels(g: MultiGraph, base: BaseEdge) -> tuple[BaseEdge, FineLabels]:
    """Layer + static refinement, swapping the base ends so the deep primed
    cell on the u side is at least as big as its mirror."""
    labels = coarse_refine(g, FineLabels(g, base, layer_partition(g, base)))
    if len(labels.cell("K'")) < len(labels.cell("L'")):
        base = base.swapped()
        labels = coarse_refine(g, FineLabels(g, base, layer_partition(g, base)))
    static_refine(g, labels)
    return base, labels


def orient_diameter4(g: MultiGraph) -> PipelineResult:
    """Strong orientation with directed diameter at most edge girth + 13."""
    base = select_base_edge(g)
    base, labels = build_labels(g, base)
    o = MixedOrientation(g)
    for step in SCHEDULE:
        if step.startswith("@"):
            staged_refine(g, labels, o, step[1:])
            continue
        try:
            apply_stage(o, g, labels, step)
        except (ConflictError, NotFound, InvalidRs) as exc:
            raise ConstructionFailure(step, exc) from exc
    left = o.undirected_edges()
    if left:
        raise InternalError(f"undirected edges remain after the schedule: {left}")
    result = PipelineResult(o, labels, base)
    result.report = verify(g, result)
    return result


def verify(g: MultiGraph, result: PipelineResult) -> VerificationReport:
    """Check strongness, the diameter bound, exact base distances, and every
    vertex against its finest cell's distance row.  Failures are report
    entries, never exceptions."""
    o, labels, base = result.orientation, result.labels, result.base
    gstar = base.gstar
    u, v = base.u, base.v
    du = o.directed_distances_to(u)
    vw = o.directed_distances_from(v)
    strong = o.is_strong()
    diam = o.directed_diameter()
    bound = gstar + 13
    bound_ok = strong and diam <= bound

    exact_failures: list[str] = []
    uv = o.directed_distances_from(u)[v]
    if uv != 1:
        exact_failures.append(f"distance u->v is {uv}, expected 1")
    if du[v] != gstar - 1:
        exact_failures.append(f"distance v->u is {du[v]}, expected {gstar - 1}")
    for w in sorted(labels.cell("S22")):
        if du[w] != 2:
            exact_failures.append(f"S22 vertex {w}: distance to u is {du[w]}, expected 2")
        if vw[w] != 2:
            exact_failures.append(f"S22 vertex {w}: distance from v is {vw[w]}, expected 2")

    violations: list[dict] = []

    def check(w: int, cell: str, row) -> None:
        (a, b), (c, d) = row
        limit_u = a + b * gstar
        limit_v = c + d * gstar
        if du[w] > limit_u:
            violations.append({"vertex": w, "cell": cell, "kind": "to_u",
                               "observed": _num(du[w]), "allowed": limit_u})
        if vw[w] > limit_v:
            violations.append({"vertex": w, "cell": cell, "kind": "from_v",
                               "observed": _num(vw[w]), "allowed": limit_v})

    s22 = labels.cell("S22")
    x_cell = labels.cell("X")
    for w in range(g.n):
        if w in (u, v) or w in s22:
            continue
        cell = labels.finest(w)
        if cell == "X":
            check(w, "X", _x_row(g, labels, w))
        elif cell in BOUND_ROWS:
            check(w, cell, BOUND_ROWS[cell])
        elif cell == "K'10":
            violations.append({"vertex": w, "cell": cell, "kind": "coverage",
                               "observed": "member of a provably empty cell",
                               "allowed": "empty"})
        else:
            violations.append({"vertex": w, "cell": cell, "kind": "coverage",
                               "observed": "no bound row", "allowed": ""})
    for w in sorted(labels.istar):
        check(w, "I*", ISTAR_ROW)

    summary = [(tag, len(eids)) for tag, eids in o.stage_log]
    return VerificationReport(
        n=g.n, m=g.m, gstar=gstar, base=base, strong=strong,
        directed_diameter=diam, bound=bound, bound_ok=bound_ok,
        exact_failures=exact_failures, cell_violations=violations,
        dist_to_u=du, dist_from_v=vw, stage_log_summary=summary,
    )


def _x_row(g: MultiGraph, labels: FineLabels, w: int):
    s22 = labels.cell("S22")
    nb = g.neighbor_set(w)
    s22_edges = sum(1 for _, x in g.incident(w) if x in s22)
    ij = labels.cell("I") | labels.cell("J")
    if s22_edges != 1 or nb & ij:
        return ((3, 0), (3, 0))
    if nb & (labels.cell("K") | labels.cell("M1")):
        return ((5, 0), (3, 0))
    return ((3, 0), (5, 0))


def _num(x: float):
    return None if x is INF else int(x)


def baseline_strong_orientation(g: MultiGraph) -> MixedOrientation:
    """Depth-first strong orientation: tree arcs down, every other arc up.

    Works on any connected bridgeless multigraph; makes no diameter promise.
    """
    if not is_connected(g):
        raise PreconditionError("graph is not connected")
    if find_bridges(g):
        raise PreconditionError("graph has a bridge")
    o = MixedOrientation(g)
    disc = [-1] * g.n
    counter = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        disc[root] = counter
        counter += 1
        stack = [(root, 0)]
        while stack:
            x, idx = stack.pop()
            inc = g.incident(x)
            while idx < len(inc):
                eid, y = inc[idx]
                idx += 1
                if o.is_directed_edge(eid):
                    continue
                if disc[y] == -1:
                    disc[y] = counter
                    counter += 1
                    o.orient(eid, x, "baseline")  # tree arc, down
                    stack.append((x, idx))
                    stack.append((y, 0))
                    break
                # non-tree edge: orient from the later-discovered endpoint up
                o.orient(eid, x if disc[x] > disc[y] else y, "baseline")
    if not o.is_strong():
        raise InternalError("baseline orientation is not strong")  # pragma: no cover
    return o
