"""Vertex connectivity through unit-capacity max-flow on the split graph.

Every vertex ``v`` becomes an arc ``v_in -> v_out`` of capacity one; each
edge ``uv`` becomes the two arcs ``u_out -> v_in`` and ``v_out -> u_in`` of
unbounded capacity.  A maximum ``s_out -> t_in`` flow then counts internally
vertex-disjoint ``s``-``t`` paths, and the saturated vertex arcs on the
residual frontier form a minimum separating set.
"""

from __future__ import annotations

from collections import deque

from .graph import Graph, from_mask, iter_bits

_INF = 1 << 30


def _build(g: Graph) -> list[dict[int, int]]:
    cap: list[dict[int, int]] = [dict() for _ in range(2 * g.n)]
    for v in range(g.n):
        cap[2 * v][2 * v + 1] = 1
        cap[2 * v + 1].setdefault(2 * v, 0)
    for u, v in g.edges():
        for a, b in ((u, v), (v, u)):
            cap[2 * a + 1][2 * b] = _INF
            cap[2 * b].setdefault(2 * a + 1, 0)
    return cap


def _max_flow(cap: list[dict[int, int]], source: int, sink: int) -> tuple[int, set[int]]:
    """Edmonds-Karp; returns the flow value and the residual-reachable set."""
    flow = 0
    while True:
        parent = {source: None}
        queue = deque([source])
        while queue and sink not in parent:
            x = queue.popleft()
            for y, c in cap[x].items():
                if c > 0 and y not in parent:
                    parent[y] = x
                    queue.append(y)
        if sink not in parent:
            return flow, set(parent)
        y = sink
        while parent[y] is not None:
            x = parent[y]
            cap[x][y] -= 1
            cap[y][x] += 1
            y = x
        flow += 1


def local_vertex_cut(g: Graph, s: int, t: int) -> frozenset[int]:
    """Minimum set of vertices separating nonadjacent ``s`` and ``t``."""
    if s == t or g.has_edge(s, t):
        raise ValueError("local vertex cut needs two distinct nonadjacent vertices")
    cap = _build(g)
    _, reach = _max_flow(cap, 2 * s + 1, 2 * t)
    return frozenset(v for v in range(g.n) if 2 * v in reach and 2 * v + 1 not in reach)


def minimum_vertex_cut(g: Graph) -> frozenset[int] | None:
    """A minimum cut set, ``frozenset()`` if ``g`` is disconnected, or ``None``
    for complete graphs (which have no cut set)."""
    if g.n <= 1:
        return None
    if not g.is_connected():
        return frozenset()
    degrees = g.degrees()
    v = min(range(g.n), key=degrees.__getitem__)
    if degrees[v] == g.n - 1:
        return None
    best: frozenset[int] | None = None
    # A minimum cut either avoids v (then it separates v from a non-neighbour)
    # or contains v (then it separates two nonadjacent neighbours of v).
    pairs = [(v, w) for w in iter_bits(g.full_mask & ~g.closed_neighbors_mask(v))]
    nbrs = sorted(from_mask(g.adj[v]))
    pairs += [(x, y) for i, x in enumerate(nbrs) for y in nbrs[i + 1:] if not g.has_edge(x, y)]
    for s, t in pairs:
        cut = local_vertex_cut(g, s, t)
        if best is None or len(cut) < len(best):
            best = cut
    return best


def vertex_connectivity(g: Graph) -> int:
    """kappa(G); ``n - 1`` for complete graphs and 0 when disconnected."""
    cut = minimum_vertex_cut(g)
    if cut is None:
        return max(g.n - 1, 0)
    return len(cut)
