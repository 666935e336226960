"""Graph corpora for verification: exhaustive small connected graphs, graph6
files and seeded random graphs.

Connected graphs of order ``n`` are produced from those of order ``n - 1`` by
attaching a new vertex to every nonempty neighbour subset (every connected
graph has a non-cut vertex, so nothing is missed), then deduplicated up to
isomorphism by a small individualisation-refinement canonical form.
"""

from __future__ import annotations

import random
from functools import lru_cache
from pathlib import Path
from typing import Iterator

from .graph import Graph, iter_bits
from .graph6 import parse_graph6

KNOWN_CONNECTED_COUNTS = (1, 1, 2, 6, 21, 112, 853, 11117)


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    while True:
        masks = [sum(1 << v for v in c) for c in cells]
        out = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                sig = tuple((adj[v] & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) > 1:
                changed = True
                out.extend(groups[s] for s in sorted(groups))
            else:
                out.append(cell)
        cells = out
        if not changed:
            return cells


def _search(adj: tuple[int, ...], cells: list[list[int]]) -> tuple[int, ...]:
    cells = _refine(adj, cells)
    target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
    if target is None:
        label = {c[0]: i for i, c in enumerate(cells)}
        rows = [0] * len(adj)
        for v, row in enumerate(adj):
            rows[label[v]] = sum(1 << label[u] for u in iter_bits(row))
        return tuple(rows)
    cell = cells[target]
    reps = []
    for v in cell:
        # Swapping twins is an automorphism fixing this partition: one per class.
        if not any((adj[v] & ~(1 << r)) == (adj[r] & ~(1 << v)) for r in reps):
            reps.append(v)
    best = None
    for v in reps:
        rest = [u for u in cell if u != v]
        code = _search(adj, cells[:target] + [[v], rest] + cells[target + 1:])
        if best is None or code < best:
            best = code
    return best


def canonical_code(g: Graph) -> tuple[int, ...]:
    """Adjacency rows under a canonical relabelling; equal iff isomorphic."""
    if g.n == 0:
        return ()
    return _search(g.adj, [list(range(g.n))])


def canonical_form(g: Graph) -> Graph:
    return Graph(g.n, canonical_code(g))


@lru_cache(maxsize=None)
def connected_graphs(n: int) -> tuple[Graph, ...]:
    """All connected graphs of order ``n`` up to isomorphism, in a fixed order."""
    if n < 1:
        return ()
    if n == 1:
        return (Graph.empty(1),)
    seen: set[tuple[int, ...]] = set()
    out = []
    for small in connected_graphs(n - 1):
        for nbrs in range(1, 1 << (n - 1)):
            rows = list(small.adj) + [nbrs]
            for u in iter_bits(nbrs):
                rows[u] |= 1 << (n - 1)
            code = canonical_code(Graph(n, tuple(rows)))
            if code not in seen:
                seen.add(code)
                out.append(code)
    return tuple(Graph(n, code) for code in sorted(out))


def exhaustive(max_n: int, min_n: int = 1) -> Iterator[Graph]:
    for n in range(min_n, max_n + 1):
        yield from connected_graphs(n)


def read_graph6_file(path: str | Path) -> list[str]:
    """Non-empty lines of a graph6 file (unparsed, for per-line error isolation)."""
    return [line.strip() for line in Path(path).read_text().splitlines() if line.strip()]


def graph6_file(path: str | Path) -> Iterator[Graph]:
    for line in read_graph6_file(path):
        yield parse_graph6(line)


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


def random_connected_graph(rng: random.Random, n: int, p: float | None = None) -> Graph:
    while True:
        g = random_graph(rng, n, rng.uniform(0.25, 0.8) if p is None else p)
        if g.is_connected():
            return g


def random_tree(rng: random.Random, n: int) -> Graph:
    """Uniform labelled tree from a random Pruefer sequence."""
    if n <= 1:
        return Graph.empty(n)
    if n == 2:
        return Graph.from_edges(2, [(0, 1)])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = [w for w in range(n) if degree[w] == 1]
    edges.append((u, v))
    return Graph.from_edges(n, edges)
