"""Exact oriented diameter by exhaustive enumeration of all 2^m orientations.

Bit k of the enumeration mask gives edge k's direction, bit value 0 meaning
Forward (first listed endpoint to second).  The reported witness is the first
optimum in ascending mask order, so results are reproducible.  Only suitable
for small instances; the edge cap guards against accidental huge runs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InternalError, TooLarge
from .graph import MultiGraph, diameter, find_bridges, is_connected
from .mixed import BACKWARD, FORWARD, MixedOrientation

INF = math.inf


@dataclass
class OracleResult:
    min_diameter: float
    witness: tuple[int, ...] | None  # per-edge FORWARD/BACKWARD, None if bridged
    orientations_checked: int

    def witness_orientation(self, g: MultiGraph) -> MixedOrientation:
        if self.witness is None:
            raise ValueError("no strong orientation exists")
        o = MixedOrientation(g)
        for eid, d in enumerate(self.witness):
            o.set_direction(eid, d, "oracle-witness")
        return o


def min_oriented_diameter(g: MultiGraph, max_edges: int = 20, splits: int = 1) -> OracleResult:
    """Minimum directed diameter over all strong orientations of g.

    splits > 1 partitions the mask space into contiguous high-order-prefix
    ranges whose results are merged by min; the outcome is independent of the
    split count (checked by tests).
    """
    if g.m > max_edges:
        raise TooLarge(f"m={g.m} exceeds cap {max_edges}")
    if g.n <= 1:
        return OracleResult(0, tuple(), 0)
    if not is_connected(g) or find_bridges(g):
        return OracleResult(INF, None, 0)

    total = 1 << g.m
    splits = max(1, min(splits, total))
    bounds = [total * i // splits for i in range(splits + 1)]
    best, wit, checked = INF, None, 0
    for i in range(splits):
        b, w, c = _scan(g, bounds[i], bounds[i + 1])
        checked += c
        if b < best:
            best, wit = b, w
    if wit is None:
        # bridgeless connected graphs always admit a strong orientation
        raise InternalError("no strong orientation found for a bridgeless graph")
    dirs = tuple(BACKWARD if wit >> e & 1 else FORWARD for e in range(g.m))
    return OracleResult(best, dirs, checked)


def _scan(g: MultiGraph, lo: int, hi: int) -> tuple[float, int | None, int]:
    n, m = g.n, g.m
    ends = g.ends
    full = (1 << n) - 1
    best: float = INF
    wit: int | None = None
    out = [0] * n
    for mask in range(lo, hi):
        for v in range(n):
            out[v] = 0
        has_in = 0
        for e in range(m):
            a, b = ends[e]
            if mask >> e & 1:
                out[b] |= 1 << a
                has_in |= 1 << a
            else:
                out[a] |= 1 << b
                has_in |= 1 << b
        if has_in != full:
            continue
        ok = True
        diam = 0
        for s in range(n):
            if not out[s]:
                ok = False
                break
            reach = frontier = 1 << s
            ecc = 0
            while reach != full:
                nxt = 0
                f = frontier
                while f:
                    lsb = f & -f
                    nxt |= out[lsb.bit_length() - 1]
                    f ^= lsb
                nxt &= ~reach
                if not nxt:
                    ok = False  # s cannot reach everything
                    break
                reach |= nxt
                frontier = nxt
                ecc += 1
                if ecc >= best:
                    ok = False  # cannot strictly improve on the current best
                    break
            if not ok:
                break
            if ecc > diam:
                diam = ecc
        if ok and diam < best:
            best, wit = diam, mask
    return best, wit, hi - lo


def spot_check_bound(g: MultiGraph, pipeline_diameter: float,
                     result: OracleResult | None = None) -> bool:
    """Cross-check a pipeline diameter against the exact optimum.

    Orientation never shortens distances, so an oracle value below the
    undirected diameter is impossible and raises; a pipeline value below the
    oracle optimum returns False (flags a pipeline bug).
    """
    if result is None:
        result = min_oriented_diameter(g)
    d = diameter(g)
    if result.min_diameter < d:
        raise InternalError(
            f"oracle {result.min_diameter} below undirected diameter {d}"
        )
    return result.min_diameter <= pipeline_diameter
