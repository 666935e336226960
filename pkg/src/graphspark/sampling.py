"""Seeded random matrices used by the verification suites."""

from __future__ import annotations

import random
from fractions import Fraction

from .constructions import FortVectorAssignment, matrix_from_fort
from .corpus import random_connected_graph, random_graph, random_tree
from .forts import zf_closure
from .graph import Graph
from .linalg import RationalMatrix, determinant, graph_of, rank


def _nonzero(rng: random.Random, lo: int = -5, hi: int = 5) -> int:
    while True:
        x = rng.randint(lo, hi)
        if x:
            return x


def pattern_matrix(rng: random.Random, g: Graph) -> RationalMatrix:
    """Random integer matrix in S(G)."""
    rows = [[0] * g.n for _ in range(g.n)]
    for i in range(g.n):
        rows[i][i] = rng.randint(-5, 5)
    for u, v in g.edges():
        rows[u][v] = rows[v][u] = _nonzero(rng)
    return RationalMatrix(rows, g.n)


def singular_by_diagonal(rng: random.Random, a: RationalMatrix) -> RationalMatrix | None:
    """Make ``a`` singular by solving for one diagonal entry.

    The determinant is affine in ``a[v, v]`` with slope ``det(A(v))``.
    """
    order = list(range(a.n_rows))
    rng.shuffle(order)
    for v in order:
        slope = determinant(a.delete(v)) if a.n_rows > 1 else Fraction(1)
        if slope == 0:
            continue
        base = determinant(a.with_entry(v, v, 0))
        out = a.with_entry(v, v, -base / slope)
        return out
    return None


def random_fort(rng: random.Random, g: Graph) -> frozenset[int]:
    """Complement of the closure of a random set; falls back to V(G)."""
    for _ in range(20):
        blue = [v for v in range(g.n) if rng.random() < 0.4]
        white = frozenset(range(g.n)) - zf_closure(g, blue)
        if white:
            return white
    return frozenset(range(g.n))


def fort_matrix(rng: random.Random, g: Graph) -> RationalMatrix:
    """Matrix in S(G) annihilating a random vector supported on a random fort,
    with random diagonal entries off the fort."""
    fort = random_fort(rng, g)
    fva = FortVectorAssignment({v for v in fort}, {v: Fraction(_nonzero(rng, -3, 3)) for v in fort})
    a = matrix_from_fort(g, fva)
    for v in range(g.n):
        if v not in fort:
            a = a.with_entry(v, v, rng.randint(-4, 4))
    return a


def low_rank_matrix(rng: random.Random, n: int, k: int, density: float = 1.0) -> RationalMatrix:
    """``U D U^T`` with integer ``U`` (n x k) and nonzero diagonal ``D``."""
    u = [[(rng.randint(-3, 3) if rng.random() < density else 0) for _ in range(k)] for _ in range(n)]
    d = [_nonzero(rng, -3, 3) for _ in range(k)]
    rows = [[sum(u[i][t] * d[t] * u[j][t] for t in range(k)) for j in range(n)] for i in range(n)]
    return RationalMatrix(rows, n)


def gram_matrix(rng: random.Random, n: int, dim: int, density: float = 0.7) -> RationalMatrix:
    """Gram matrix of ``n`` random integer vectors in dimension ``dim`` (PSD)."""
    u = [[(rng.randint(-2, 2) if rng.random() < density else 0) for _ in range(dim)] for _ in range(n)]
    rows = [[sum(p * q for p, q in zip(u[i], u[j])) for j in range(n)] for i in range(n)]
    return RationalMatrix(rows, n)


def singular_pattern_sample(rng: random.Random, nmax: int) -> tuple[Graph, RationalMatrix]:
    """A singular matrix over a random connected pattern of order 2..nmax."""
    while True:
        n = rng.randint(2, nmax)
        g = random_connected_graph(rng, n)
        if rng.random() < 0.5:
            a = singular_by_diagonal(rng, pattern_matrix(rng, g))
            if a is None:
                continue
        else:
            a = fort_matrix(rng, g)
        if rank(a) < n:
            return g, a


def singular_symmetric_sample(rng: random.Random, nmax: int) -> RationalMatrix:
    """Mix of dense/sparse low-rank products and fort-pattern matrices."""
    while True:
        n = rng.randint(2, nmax)
        pick = rng.random()
        if pick < 0.4:
            a = low_rank_matrix(rng, n, rng.randint(1, n - 1))
        elif pick < 0.7:
            a = low_rank_matrix(rng, n, rng.randint(1, n - 1), density=0.5)
        else:
            a = fort_matrix(rng, random_connected_graph(rng, n))
        if rank(a) < n:
            return a


def nullity_two_sample(rng: random.Random, nmax: int) -> RationalMatrix:
    """Symmetric matrix of order 3..nmax with nullity at least two."""
    while True:
        n = rng.randint(3, nmax)
        pick = rng.random()
        if pick < 0.6:
            a = low_rank_matrix(rng, n, rng.randint(1, n - 2), density=rng.choice([0.5, 0.8, 1.0]))
        else:
            g = random_graph(rng, n, rng.uniform(0.2, 0.6))
            comps = g.component_masks()
            if len(comps) < 2:
                continue
            rows = [[0] * n for _ in range(n)]
            for u, v in g.edges():
                w = _nonzero(rng)
                rows[u][v] = rows[v][u] = -w
                rows[u][u] += w
                rows[v][v] += w
            a = RationalMatrix(rows, n)
        if n - rank(a) >= 2:
            return a


def singular_tree_sample(rng: random.Random, nmax: int) -> tuple[Graph, RationalMatrix]:
    while True:
        n = rng.randint(2, nmax)
        t = random_tree(rng, n)
        if rng.random() < 0.5:
            a = singular_by_diagonal(rng, pattern_matrix(rng, t))
            if a is None:
                continue
        else:
            a = fort_matrix(rng, t)
        if rank(a) < n and graph_of(a) == t:
            return t, a


def symmetric_sample(rng: random.Random, nmax: int) -> RationalMatrix:
    """Random symmetric integer matrix, sometimes singular."""
    n = rng.randint(1, nmax)
    if rng.random() < 0.5:
        return pattern_matrix(rng, random_graph(rng, n, rng.uniform(0.2, 0.9)))
    return low_rank_matrix(rng, n, rng.randint(1, n), density=0.7)


def psd_sample(rng: random.Random, nmax: int) -> RationalMatrix:
    n = rng.randint(2, nmax)
    return gram_matrix(rng, n, rng.randint(1, n))
