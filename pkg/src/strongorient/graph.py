"""Loop-free undirected multigraph with distance, bridge and girth queries.

Vertices are dense integers in [0, n); edges are dense integers in [0, m)
in order of appearance, which makes parallel edges distinguishable and every
"pick the lowest id" tie-break reproducible.  A MultiGraph is immutable after
construction, so instances can be shared freely.
"""

from __future__ import annotations

import math
from collections import deque
from typing import Iterable, Sequence

INF = math.inf


class MultiGraph:
    """Undirected multigraph without loops; parallel edges allowed."""

    __slots__ = ("n", "m", "ends", "_inc", "_adj", "_adj_set")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        self.n = n
        ends: list[tuple[int, int]] = []
        inc: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for a, b in edges:
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"edge ({a},{b}) out of range for n={n}")
            if a == b:
                raise ValueError(f"loop at vertex {a} not allowed")
            eid = len(ends)
            ends.append((a, b))
            inc[a].append((eid, b))
            inc[b].append((eid, a))
        self.m = len(ends)
        self.ends = tuple(ends)
        self._inc = tuple(tuple(lst) for lst in inc)
        self._adj = tuple(tuple(sorted({w for _, w in lst})) for lst in inc)
        self._adj_set = tuple(frozenset(a) for a in self._adj)

    def incident(self, v: int) -> tuple[tuple[int, int], ...]:
        """(edge id, other endpoint) pairs at v, ascending edge id."""
        return self._inc[v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def neighbor_set(self, v: int) -> frozenset[int]:
        return self._adj_set[v]

    def set_neighborhood(self, vertices: Iterable[int]) -> set[int]:
        """N(U): vertices adjacent to U, excluding U itself."""
        vs = set(vertices)
        out: set[int] = set()
        for v in vs:
            out.update(self._adj[v])
        return out - vs

    def edges_between(self, a: int, b: int) -> list[int]:
        """All edge ids joining a and b (parallel edges give several)."""
        return [eid for eid, w in self._inc[a] if w == b]

    def edge_set_between(self, us: Iterable[int], vs: Iterable[int]) -> list[int]:
        """[U, V]: ids of edges with one end in U and the other in V."""
        uset, vset = set(us), set(vs)
        out = []
        for eid, (a, b) in enumerate(self.ends):
            if (a in uset and b in vset) or (b in uset and a in vset):
                out.append(eid)
        return out

    def other_end(self, eid: int, v: int) -> int:
        a, b = self.ends[eid]
        if v == a:
            return b
        if v == b:
            return a
        raise ValueError(f"vertex {v} not an endpoint of edge {eid}")

    def __repr__(self) -> str:
        return f"MultiGraph(n={self.n}, m={self.m})"


def bfs_distances(g: MultiGraph, src: int, skip_edge: int | None = None) -> list[float]:
    """Hop distances from src; INF where unreachable.

    skip_edge removes a single edge id from consideration (used by edge_girth);
    a parallel partner of the skipped edge is still traversable.
    """
    dist: list[float] = [INF] * g.n
    dist[src] = 0
    q = deque([src])
    while q:
        v = q.popleft()
        dv = dist[v] + 1
        for eid, w in g._inc[v]:
            if eid == skip_edge:
                continue
            if dist[w] is INF:
                dist[w] = dv
                q.append(w)
    return dist


def multi_source_distances(g: MultiGraph, sources: Iterable[int]) -> list[float]:
    """Hop distance from the nearest of several sources."""
    dist: list[float] = [INF] * g.n
    q = deque()
    for s in sources:
        if dist[s] is INF:
            dist[s] = 0
            q.append(s)
    while q:
        v = q.popleft()
        dv = dist[v] + 1
        for _, w in g._inc[v]:
            if dist[w] is INF:
                dist[w] = dv
                q.append(w)
    return dist


def eccentricity(g: MultiGraph, v: int) -> float:
    return max(bfs_distances(g, v))


def diameter(g: MultiGraph) -> float:
    """Max pairwise distance; INF iff disconnected (or n == 0 treated as 0)."""
    if g.n == 0:
        return 0
    return max(max(bfs_distances(g, v)) for v in range(g.n))


def is_connected(g: MultiGraph) -> bool:
    if g.n == 0:
        return True
    return INF not in bfs_distances(g, 0)


def find_bridges(g: MultiGraph) -> set[int]:
    """Bridge edge ids via one iterative DFS with lowpoints.

    Parallel edges are handled by tracking the edge id used to enter a vertex:
    re-reaching the parent through a different edge id is a genuine back edge,
    so a parallel pair is never reported as a bridge.
    """
    visited = [False] * g.n
    disc = [0] * g.n
    low = [0] * g.n
    bridges: set[int] = set()
    counter = 0
    for root in range(g.n):
        if visited[root]:
            continue
        # stack holds (vertex, entering edge id, iterator index into incident list)
        stack = [(root, -1, 0)]
        visited[root] = True
        disc[root] = low[root] = counter
        counter += 1
        while stack:
            v, in_edge, idx = stack.pop()
            inc = g._inc[v]
            advanced = False
            while idx < len(inc):
                eid, w = inc[idx]
                idx += 1
                if eid == in_edge:
                    continue
                if not visited[w]:
                    stack.append((v, in_edge, idx))
                    visited[w] = True
                    disc[w] = low[w] = counter
                    counter += 1
                    stack.append((w, eid, 0))
                    advanced = True
                    break
                low[v] = min(low[v], disc[w])
            if advanced:
                continue
            # v is finished; propagate lowpoint to its parent
            if in_edge != -1:
                a, b = g.ends[in_edge]
                parent = a if b == v else b
                if low[v] > disc[parent]:
                    bridges.add(in_edge)
                low[parent] = min(low[parent], low[v])
    return bridges


def is_bridgeless(g: MultiGraph) -> bool:
    return not find_bridges(g)


def edge_girth(g: MultiGraph, eid: int) -> float:
    """Length of the shortest cycle through edge eid; INF iff eid is a bridge.

    Computed as 1 + shortest path between the endpoints in G - eid, over the
    multigraph, so a parallel partner yields 2.
    """
    a, b = g.ends[eid]
    d = bfs_distances(g, a, skip_edge=eid)[b]
    return d + 1 if d is not INF else INF


def graph_edge_girth(g: MultiGraph) -> float:
    """Max over edges of edge_girth; INF iff the graph has a bridge."""
    if g.m == 0:
        raise ValueError("graph has no edges")
    return max(edge_girth(g, eid) for eid in range(g.m))


def parse_edge_list(pairs: Sequence[tuple[int, int]], n: int | None = None) -> MultiGraph:
    """Convenience constructor; n defaults to 1 + max vertex id."""
    if n is None:
        n = 1 + max((max(a, b) for a, b in pairs), default=-1)
    return MultiGraph(n, pairs)
