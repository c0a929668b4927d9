"""Partial-orientation state over a MultiGraph.

An edge is Undirected, Forward (first listed endpoint -> second) or Backward.
Undirected edges are NOT traversable in any distance query here: directed
distances are taken over the digraph of already-directed edges only.  A
direction, once set, is final; asking for the opposite one raises
ConflictError, which deliberately aborts the caller (two orientation rules
disagreeing is always a bug worth surfacing, never something to overwrite).
"""

from __future__ import annotations

import math
from collections import deque
from typing import Iterable

from .errors import ConflictError
from .graph import MultiGraph

INF = math.inf

UNDIRECTED = 0
FORWARD = 1
BACKWARD = 2


class MixedOrientation:
    """Per-edge direction state plus a log of which stage oriented what."""

    def __init__(self, base: MultiGraph):
        self.base = base
        self._dir = [UNDIRECTED] * base.m
        # arcs maintained incrementally: _out[v] / _in[v] hold (edge, other)
        self._out: list[list[tuple[int, int]]] = [[] for _ in range(base.n)]
        self._in: list[list[tuple[int, int]]] = [[] for _ in range(base.n)]
        self._directed_deg = [0] * base.n
        self.stage_log: list[tuple[str, list[int]]] = []
        self._stage_index: dict[str, int] = {}

    # -- mutation ---------------------------------------------------------

    def set_direction(self, eid: int, direction: int, stage: str) -> None:
        """Record a direction; same direction twice is a no-op."""
        if direction not in (FORWARD, BACKWARD):
            raise ValueError("direction must be FORWARD or BACKWARD")
        cur = self._dir[eid]
        if cur == direction:
            return
        if cur != UNDIRECTED:
            raise ConflictError(eid, _name(cur), _name(direction), stage)
        self._dir[eid] = direction
        a, b = self.base.ends[eid]
        tail, head = (a, b) if direction == FORWARD else (b, a)
        self._out[tail].append((eid, head))
        self._in[head].append((eid, tail))
        self._directed_deg[a] += 1
        self._directed_deg[b] += 1
        if stage not in self._stage_index:
            self._stage_index[stage] = len(self.stage_log)
            self.stage_log.append((stage, []))
        self.stage_log[self._stage_index[stage]][1].append(eid)

    def orient(self, eid: int, tail: int, stage: str) -> None:
        """Orient an edge away from the given endpoint."""
        a, b = self.base.ends[eid]
        if tail == a:
            self.set_direction(eid, FORWARD, stage)
        elif tail == b:
            self.set_direction(eid, BACKWARD, stage)
        else:
            raise ValueError(f"vertex {tail} not an endpoint of edge {eid}")

    def orient_all(self, eids: Iterable[int], tail_side: set[int], stage: str) -> None:
        """Orient each edge so its endpoint inside tail_side is the tail."""
        for eid in eids:
            a, b = self.base.ends[eid]
            self.orient(eid, a if a in tail_side else b, stage)

    # -- queries ----------------------------------------------------------

    def direction(self, eid: int) -> int:
        return self._dir[eid]

    def is_directed_edge(self, eid: int) -> bool:
        return self._dir[eid] != UNDIRECTED

    def arc(self, eid: int) -> tuple[int, int] | None:
        """(tail, head) if directed, else None."""
        d = self._dir[eid]
        if d == UNDIRECTED:
            return None
        a, b = self.base.ends[eid]
        return (a, b) if d == FORWARD else (b, a)

    def arc_matches(self, eid: int, tail: int) -> bool:
        """True iff eid is directed with the given tail."""
        a = self.arc(eid)
        return a is not None and a[0] == tail

    def undirected_edges(self) -> list[int]:
        return [e for e, d in enumerate(self._dir) if d == UNDIRECTED]

    def is_undirected_vertex(self, v: int) -> bool:
        return self._directed_deg[v] == 0

    def directed_vertices(self) -> set[int]:
        return {v for v in range(self.base.n) if self._directed_deg[v] > 0}

    def out_arcs(self, v: int) -> list[tuple[int, int]]:
        return self._out[v]

    def in_arcs(self, v: int) -> list[tuple[int, int]]:
        return self._in[v]

    def direction_snapshot(self) -> tuple[int, ...]:
        return tuple(self._dir)

    def snapshot(self) -> "MixedOrientation":
        """Immutable-by-convention copy safe for concurrent readers."""
        o = MixedOrientation(self.base)
        o._dir = list(self._dir)
        o._out = [list(x) for x in self._out]
        o._in = [list(x) for x in self._in]
        o._directed_deg = list(self._directed_deg)
        o.stage_log = [(tag, list(eids)) for tag, eids in self.stage_log]
        o._stage_index = dict(self._stage_index)
        return o

    # -- directed distances -------------------------------------------------

    def directed_distances_from(self, src: int) -> list[float]:
        return self._bfs(src, self._out)

    def directed_distances_to(self, dst: int) -> list[float]:
        return self._bfs(dst, self._in)

    def _bfs(self, src: int, adj: list[list[tuple[int, int]]]) -> list[float]:
        dist: list[float] = [INF] * self.base.n
        dist[src] = 0
        q = deque([src])
        while q:
            v = q.popleft()
            dv = dist[v] + 1
            for _, w in adj[v]:
                if dist[w] is INF:
                    dist[w] = dv
                    q.append(w)
        return dist

    def is_strong(self) -> bool:
        n = self.base.n
        if n <= 1:
            return True
        if INF in self.directed_distances_from(0):
            return False
        return INF not in self.directed_distances_to(0)

    def directed_diameter(self) -> float:
        """Max directed distance over ordered pairs; INF iff not strong."""
        best = 0.0
        for v in range(self.base.n):
            d = max(self.directed_distances_from(v))
            if d is INF:
                return INF
            best = max(best, d)
        return best

    def theta(self, x: int, targets: Iterable[int]) -> float:
        """max(distance x -> set, distance set -> x)."""
        tset = set(targets)
        if not tset:
            raise ValueError("theta over an empty set")
        if x in tset:
            raise ValueError("theta requires x outside the set")
        fwd = self.directed_distances_from(x)
        back = self.directed_distances_to(x)
        return max(min(fwd[t] for t in tset), min(back[t] for t in tset))


def _name(d: int) -> str:
    return {UNDIRECTED: "undirected", FORWARD: "forward", BACKWARD: "backward"}[d]
