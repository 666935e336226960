"""Matrix constructions: Laplacian/adjacency, a matrix in S(G) with a
prescribed fort-supported null vector, bordering, and the diagonal rank bump
that keeps spark fixed."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import ConstructionError, DomainError, PreconditionError
from .forts import is_fort
from .graph import Graph, iter_bits
from .linalg import RationalMatrix, graph_of, matrix_spark, null_basis, rank, support


def adjacency(g: Graph) -> RationalMatrix:
    return RationalMatrix([[1 if g.has_edge(i, j) else 0 for j in range(g.n)] for i in range(g.n)], g.n)


def laplacian(g: Graph) -> RationalMatrix:
    return RationalMatrix(
        [[g.degree(i) if i == j else (-1 if g.has_edge(i, j) else 0) for j in range(g.n)] for i in range(g.n)],
        g.n,
    )


@dataclass(frozen=True)
class FortVectorAssignment:
    fort: frozenset[int]
    values: Mapping[int, Fraction]

    @classmethod
    def ones(cls, fort) -> "FortVectorAssignment":
        fort = frozenset(fort)
        return cls(fort, {v: Fraction(1) for v in fort})

    @classmethod
    def from_lists(cls, fort: Sequence[int], values: Sequence) -> "FortVectorAssignment":
        if len(fort) != len(values):
            raise DomainError("fort and values must have the same length")
        return cls(frozenset(fort), {v: Fraction(x) for v, x in zip(fort, values)})

    def __post_init__(self):
        if set(self.values) != set(self.fort):
            raise DomainError("values must be given for exactly the fort vertices")
        if any(Fraction(x) == 0 for x in self.values.values()):
            raise DomainError("fort vector values must be nonzero")

    def vector(self, n: int) -> tuple[Fraction, ...]:
        return tuple(Fraction(self.values.get(i, 0)) for i in range(n))


def matrix_from_fort(g: Graph, fva: FortVectorAssignment) -> RationalMatrix:
    """A matrix ``A`` in S(G) with ``A x = 0`` where ``x`` is ``fva`` padded
    with zeros.

    Start from the adjacency matrix.  For each vertex ``i`` off the fort let
    ``B`` be its fort neighbours; give edge ``ij`` (``j`` in ``B``) weight
    ``1/x_j``, except ``j = max B`` which gets ``(1 - |B|)/x_j``.  Finally set
    each fort diagonal entry so that row's product with ``x`` vanishes.
    Vertices off the fort with no fort neighbours leave their row unchanged.
    """
    if any(v < 0 or v >= g.n for v in fva.fort):
        raise DomainError("fort vertex out of range")
    if not is_fort(g, fva.fort):
        raise DomainError(f"{sorted(fva.fort)} is not a fort of the graph")
    x = fva.vector(g.n)
    a = adjacency(g).to_lists()
    fort_mask = sum(1 << v for v in fva.fort)
    for i in range(g.n):
        if x[i] != 0:
            continue
        b = sorted(iter_bits(g.adj[i] & fort_mask))
        if not b:
            continue
        top = b[-1]
        for j in b:
            w = (1 - len(b)) / x[j] if j == top else 1 / x[j]
            a[i][j] = a[j][i] = w
    for k in range(g.n):
        if x[k] != 0:
            off = sum([a[k][j] * x[j] for j in range(g.n) if j != k and x[j] and a[k][j]], Fraction(0))
            a[k][k] = -off / x[k]
    result = RationalMatrix(a, g.n)
    for i in range(g.n):
        for j in range(i + 1, g.n):
            if (result[i, j] != 0) != g.has_edge(i, j):
                raise ConstructionError(f"entry ({i}, {j}) breaks the pattern of the graph")
    if any(y != 0 for y in result.matvec(x)):
        raise ConstructionError("constructed matrix does not annihilate the fort vector")
    return result


def border(a: RationalMatrix, x: Sequence) -> RationalMatrix:
    """``[[x^T A x, x^T A], [A x, A]]``; same rank as ``A`` and annihilates
    ``(-1, x)``."""
    if not a.symmetric:
        raise DomainError("border needs a symmetric matrix")
    if len(x) != a.n_rows:
        raise DomainError(f"x has length {len(x)}, matrix has order {a.n_rows}")
    x = [Fraction(v) for v in x]
    ax = a.matvec(x)
    corner = sum((p * q for p, q in zip(x, ax)), Fraction(0))
    rows = [[corner, *ax]]
    for i, r in enumerate(a.rows):
        rows.append([ax[i], *r])
    return RationalMatrix(rows)


@dataclass(frozen=True)
class RankBump:
    matrix: RationalMatrix
    index: int
    kept_null_vectors: tuple[tuple[Fraction, ...], ...]


def rank_bump_details(a: RationalMatrix) -> RankBump:
    """Raise the rank by one via ``A + E_jj`` while keeping the spark.

    ``eta1`` is the lexicographically least minimum-support null vector and
    ``eta2`` the first null-basis vector independent of it; ``j`` is the least
    index in ``supp(eta2)`` outside ``supp(eta1)``.  The remaining basis vectors
    are shifted by multiples of ``eta2`` to vanish at ``j``; together with
    ``eta1`` they span the new null space.
    """
    if not a.symmetric:
        raise DomainError("rank_bump needs a symmetric matrix")
    n = a.n_rows
    k = rank(a)
    if k >= n - 1:
        raise PreconditionError(f"rank_bump needs rank < n - 1 (rank {k}, n {n})")
    cert = matrix_spark(a)
    eta1 = cert.witness
    basis = [eta1]
    for v in null_basis(a).vectors:
        if rank(RationalMatrix(basis + [v])) == len(basis) + 1:
            basis.append(v)
    if len(basis) != n - k:
        raise AssertionError("failed to extend the minimum-support vector to a null basis")
    eta2 = basis[1]
    candidates = sorted(support(eta2) - support(eta1))
    if not candidates:
        raise AssertionError("no index in supp(eta2) outside supp(eta1); minimum support is violated")
    j = candidates[0]
    shifted = []
    for eta in basis[2:]:
        c = eta[j] / eta2[j]
        shifted.append(tuple(c * p - q for p, q in zip(eta2, eta)))
    b = a.with_entry(j, j, a[j, j] + 1)
    kept = (eta1, *shifted)
    for eta in kept:
        if any(y != 0 for y in b.matvec(eta)):
            raise AssertionError("kept null vector is not annihilated by the bumped matrix")
    if rank(b) != k + 1:
        raise AssertionError("rank did not increase by exactly one")
    return RankBump(b, j, kept)


def rank_bump(a: RationalMatrix) -> RationalMatrix:
    return rank_bump_details(a).matrix


def same_pattern(a: RationalMatrix, b: RationalMatrix) -> bool:
    return graph_of(a) == graph_of(b)
