"""Forts, minimum fort search (graph spark) and standard zero forcing.

A fort is a nonempty vertex set ``F`` such that no vertex outside ``F`` has
exactly one neighbour in ``F``.  The minimum fort size equals the spark of the
graph, the zero blocking number, and ``n`` minus the failed zero forcing
number.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

import numpy as np

from .errors import CapacityError, DomainError
from .graph import Graph, from_mask, iter_bits, to_mask

DEFAULT_SEQUENCE_LIMIT = 16
EMIT_LIMIT = 10


@dataclass(frozen=True)
class FortReport:
    minimum_fort: frozenset[int]
    size: int
    method: str

    def to_dict(self) -> dict:
        return {"spark": self.size, "fort": sorted(self.minimum_fort), "method": self.method}


@dataclass(frozen=True)
class FortSequence:
    """Fort counts by cardinality.

    ``counts`` is ``(s_2, ..., s_n)``; ``singletons`` holds ``s_1``, which is
    nonzero only for graphs with isolated vertices.
    """

    n: int
    counts: tuple[int, ...]
    singletons: int = 0
    forts: tuple[frozenset[int], ...] | None = field(default=None, compare=False)

    def count(self, size: int) -> int:
        if size == 1:
            return self.singletons
        if 2 <= size <= self.n:
            return self.counts[size - 2]
        return 0

    def to_dict(self) -> dict:
        out = {"n": self.n, "sequence": list(self.counts), "s1": self.singletons}
        if self.forts is not None:
            out["forts"] = [sorted(f) for f in self.forts]
        return out


def _fort_mask(adj: tuple[int, ...], n: int, mask: int) -> bool:
    if not mask:
        return False
    outside = ((1 << n) - 1) & ~mask
    for v in iter_bits(outside):
        if (adj[v] & mask).bit_count() == 1:
            return False
    return True


def is_fort(g: Graph, f: Iterable[int]) -> bool:
    """True iff ``f`` is a nonempty set with no outside vertex seeing exactly
    one of its members."""
    return _fort_mask(g.adj, g.n, to_mask(f, g.n))


def spark_brute_force(g: Graph) -> FortReport:
    """Smallest fort by enumerating subsets in size-then-lexicographic order."""
    for k in range(1, g.n + 1):
        for combo in combinations(range(g.n), k):
            if _fort_mask(g.adj, g.n, to_mask(combo)):
                return FortReport(frozenset(combo), k, "brute_force")
    raise DomainError("the empty graph has no forts")


class _FortSearch:
    """Depth-first fort search with a size cap.

    Vertices are in, out, or undecided.  An out-vertex with one in-neighbour
    and no undecided neighbour is a contradiction; with exactly one undecided
    neighbour that neighbour is forced in.  Branching takes the lowest
    undecided index and tries "in" first, so the first fort found under cap
    ``k`` has the lexicographically smallest member list among size-``k`` forts.
    """

    def __init__(self, g: Graph):
        self.adj = g.adj
        self.full = g.full_mask
        self.nodes = 0

    def _propagate(self, inside: int, outside: int, cap: int) -> tuple[int, int] | None:
        adj = self.adj
        while True:
            size = inside.bit_count()
            if size > cap:
                return None
            if size == cap:
                outside = self.full & ~inside
            changed = False
            decided = inside | outside
            for v in iter_bits(outside):
                row = adj[v]
                if (row & inside).bit_count() == 1:
                    free = row & ~decided
                    if not free:
                        return None
                    if not free & (free - 1):
                        inside |= free
                        decided |= free
                        changed = True
            if not changed:
                return inside, outside

    def _search(self, inside: int, outside: int, cap: int) -> int | None:
        self.nodes += 1
        state = self._propagate(inside, outside, cap)
        if state is None:
            return None
        inside, outside = state
        free = self.full & ~(inside | outside)
        if not free:
            return inside or None
        bit = free & -free
        found = self._search(inside | bit, outside, cap)
        if found is not None:
            return found
        return self._search(inside, outside | bit, cap)

    def find(self, cap: int) -> int | None:
        return self._search(0, 0, cap)


def spark_branch_and_bound(g: Graph) -> FortReport:
    """Smallest fort by iterative deepening over the fort size."""
    if g.n == 0:
        raise DomainError("the empty graph has no forts")
    search = _FortSearch(g)
    for cap in range(1, g.n + 1):
        found = search.find(cap)
        if found is not None:
            return FortReport(from_mask(found), found.bit_count(), "branch_and_bound")
    raise AssertionError("V(G) is always a fort; search must succeed")


def spark(g: Graph, method: str = "branch_and_bound") -> FortReport:
    """Spark of ``g``: a lexicographically least fort of minimum size.

    Isolated vertices are singleton forts, so a graph with one has spark 1.
    Disconnected graphs need no special handling since the global minimum is
    attained inside some component.
    """
    if method == "branch_and_bound":
        return spark_branch_and_bound(g)
    if method == "brute_force":
        return spark_brute_force(g)
    raise DomainError(f"unknown spark method {method!r}")


def fort_sequence(g: Graph, limit: int = DEFAULT_SEQUENCE_LIMIT, emit: bool = False) -> FortSequence:
    """Count forts of each size by exhaustive enumeration of all subsets.

    With ``emit`` the forts themselves are returned as well (orders up to 10).
    """
    n = g.n
    if n > limit:
        raise CapacityError(
            f"fort enumeration is limited to n <= {limit} (got {n}); use spark() for the minimum fort only"
        )
    if emit and n > EMIT_LIMIT:
        raise CapacityError(f"emitting forts is limited to n <= {EMIT_LIMIT}")
    if n == 0:
        return FortSequence(0, (), 0, () if emit else None)
    masks = np.arange(1, 1 << n, dtype=np.uint64)
    bad = np.zeros(masks.shape, dtype=bool)
    for v in range(n):
        outside = ((masks >> np.uint64(v)) & np.uint64(1)) == 0
        hits = np.bitwise_count(masks & np.uint64(g.adj[v]))
        bad |= outside & (hits == 1)
    good = masks[~bad]
    sizes = np.bitwise_count(good).astype(np.int64)
    tally = np.bincount(sizes, minlength=n + 1)
    forts = None
    if emit:
        ordered = sorted((from_mask(int(m)) for m in good), key=lambda f: (len(f), sorted(f)))
        forts = tuple(ordered)
    return FortSequence(n, tuple(int(c) for c in tally[2:]), int(tally[1]), forts)


def zf_closure(g: Graph, blue: Iterable[int]) -> frozenset[int]:
    """Closure of ``blue`` under the standard zero forcing colour change rule."""
    closed = to_mask(blue, g.n)
    adj = g.adj
    changed = True
    while changed:
        changed = False
        for v in iter_bits(closed):
            white = adj[v] & ~closed
            if white and not white & (white - 1):
                closed |= white
                changed = True
    return from_mask(closed)


def is_zero_forcing_set(g: Graph, blue: Iterable[int]) -> bool:
    return len(zf_closure(g, blue)) == g.n


def failed_zero_forcing_number(g: Graph) -> int:
    """Largest size of a set that fails to force the whole graph."""
    return g.n - spark(g).size


def zero_blocking_number(g: Graph) -> int:
    return spark(g).size


def failed_zero_forcing_number_exhaustive(g: Graph) -> int:
    """Direct maximisation over non-forcing sets; exponential, for checking."""
    for k in range(g.n, -1, -1):
        for combo in combinations(range(g.n), k):
            if not is_zero_forcing_set(g, combo):
                return k
    return -1
