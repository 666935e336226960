"""Simple undirected graphs stored as adjacency bitsets.

Vertices are ``0..n-1``.  Row ``adj[v]`` is an ``int`` whose bit ``u`` is set
iff ``u`` is adjacent to ``v``.  Python integers are unbounded, so the same
representation serves graphs of any order; the 64-vertex word limit of a
fixed-width implementation does not apply here.

Vertex sets cross the public API as ``frozenset[int]``; internally they are
bitmasks (see :func:`to_mask` and :func:`from_mask`).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import DomainError

VertexSet = frozenset


def to_mask(vertices: Iterable[int], n: int | None = None) -> int:
    mask = 0
    for v in vertices:
        if v < 0 or (n is not None and v >= n):
            raise DomainError(f"vertex {v} out of range for a graph of order {n}")
        mask |= 1 << v
    return mask


def from_mask(mask: int) -> frozenset[int]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return frozenset(out)


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph; ``adj[v]`` is the open neighbourhood of ``v``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise DomainError("graph order must be non-negative")
        if len(self.adj) != self.n:
            raise DomainError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise DomainError(f"row {v} references vertices outside 0..{self.n - 1}")
            if row >> v & 1:
                raise DomainError(f"loop at vertex {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise DomainError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise DomainError(f"edge {u}-{v} out of range for order {n}")
            if u == v:
                raise DomainError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> frozenset[int]:
        return from_mask(self.adj[v])

    def closed_neighbors_mask(self, v: int) -> int:
        return self.adj[v] | (1 << v)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def min_degree(self) -> int:
        return min((row.bit_count() for row in self.adj), default=0)

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def component_masks(self, within: int | None = None) -> list[int]:
        """Connected components of the subgraph induced on ``within``."""
        remaining = self.full_mask if within is None else within
        comps = []
        while remaining:
            seed = remaining & -remaining
            comp = seed
            frontier = seed
            while frontier:
                reach = 0
                for v in iter_bits(frontier):
                    reach |= self.adj[v]
                reach &= remaining & ~comp
                comp |= reach
                frontier = reach
            comps.append(comp)
            remaining &= ~comp
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.component_masks()) == 1

    def induced_subgraph(self, vertices: Iterable[int]) -> "Graph":
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        rows = []
        for v in keep:
            rows.append(to_mask(index[u] for u in iter_bits(self.adj[v]) if u in index))
        return Graph(len(keep), tuple(rows))

    def relabel(self, perm: list[int]) -> "Graph":
        """Graph in which old vertex ``v`` becomes ``perm[v]``."""
        rows = [0] * self.n
        for v in range(self.n):
            rows[perm[v]] = to_mask(perm[u] for u in iter_bits(self.adj[v]))
        return Graph(self.n, tuple(rows))

    def complement(self) -> "Graph":
        full = self.full_mask
        return Graph(self.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(self.adj)))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def duplicate_vertices(g: Graph) -> tuple[int, int] | None:
    """Return the first pair ``(u, v)`` of duplicate vertices, or ``None``.

    Adjacent vertices are duplicates when their closed neighbourhoods agree;
    nonadjacent ones when their open neighbourhoods agree.  Any such pair is a
    fort of size two.
    """
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.has_edge(u, v):
                if g.closed_neighbors_mask(u) == g.closed_neighbors_mask(v):
                    return (u, v)
            elif g.adj[u] == g.adj[v]:
                return (u, v)
    return None
