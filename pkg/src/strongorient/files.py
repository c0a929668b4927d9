"""Plain-text file formats.

Graph file: first non-comment line "n m", then m lines "a b" with 0-based
vertex ids; '#' starts a comment.  Edge order in the file defines edge ids.

Orientation file: m lines "a b D" aligned with the graph file's edge order,
where D is ">" for a->b and "<" for b->a.
"""

from __future__ import annotations

from .errors import PreconditionError
from .graph import MultiGraph
from .mixed import BACKWARD, FORWARD, MixedOrientation


def parse_graph(text: str) -> MultiGraph:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        rows.append((lineno, parts))
    if not rows:
        raise PreconditionError("empty graph file")
    lineno, header = rows[0]
    if len(header) != 2:
        raise PreconditionError(f"line {lineno}: expected 'n m' header")
    n, m = int(header[0]), int(header[1])
    if len(rows) - 1 != m:
        raise PreconditionError(f"expected {m} edge lines, found {len(rows) - 1}")
    edges = []
    for lineno, parts in rows[1:]:
        if len(parts) != 2:
            raise PreconditionError(f"line {lineno}: expected 'a b'")
        edges.append((int(parts[0]), int(parts[1])))
    try:
        return MultiGraph(n, edges)
    except ValueError as exc:
        raise PreconditionError(str(exc)) from exc


def format_graph(g: MultiGraph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{a} {b}" for a, b in g.ends)
    return "\n".join(lines) + "\n"


def format_orientation(o: MixedOrientation) -> str:
    lines = []
    for eid, (a, b) in enumerate(o.base.ends):
        d = o.direction(eid)
        if d == FORWARD:
            lines.append(f"{a} {b} >")
        elif d == BACKWARD:
            lines.append(f"{a} {b} <")
        else:
            raise PreconditionError(f"edge {eid} is undirected")
    return "\n".join(lines) + "\n"


def parse_orientation(text: str, g: MultiGraph) -> MixedOrientation:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        rows.append((lineno, line.split()))
    if len(rows) != g.m:
        raise PreconditionError(
            f"orientation has {len(rows)} lines for {g.m} edges"
        )
    o = MixedOrientation(g)
    for eid, (lineno, parts) in enumerate(rows):
        if len(parts) != 3 or parts[2] not in (">", "<"):
            raise PreconditionError(f"line {lineno}: expected 'a b >' or 'a b <'")
        a, b = int(parts[0]), int(parts[1])
        if (a, b) != g.ends[eid]:
            raise PreconditionError(
                f"line {lineno}: edge ({a},{b}) does not match graph edge {g.ends[eid]}"
            )
        o.set_direction(eid, FORWARD if parts[2] == ">" else BACKWARD, "file")
    return o
