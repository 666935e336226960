"""Exact rational linear algebra for small symmetric matrices.

Everything here works over :class:`fractions.Fraction`; no floating point is
used, so singularity decisions are exact.  Rank and determinants use Bareiss
fraction-free elimination on integer-scaled rows; null spaces come from the
reduced row echelon form.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import gcd, lcm
from typing import Iterable, Sequence

from .errors import CapacityError, DomainError
from .forts import is_fort
from .graph import Graph

Vector = tuple[Fraction, ...]

DEFAULT_GENERIC_LIMIT = 6


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating point entries are not accepted; use int, str or Fraction")
    return Fraction(x)


class RationalMatrix:
    """Immutable dense matrix of exact rationals."""

    __slots__ = ("_rows", "n_rows", "n_cols", "_hash")

    def __init__(self, rows: Iterable[Iterable], n_cols: int | None = None):
        data = tuple(tuple(_frac(x) for x in row) for row in rows)
        if data:
            width = len(data[0])
            if any(len(r) != width for r in data):
                raise DomainError("ragged matrix rows")
        else:
            width = n_cols or 0
        self._rows = data
        self.n_rows = len(data)
        self.n_cols = width
        self._hash = None

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n_rows: int, n_cols: int) -> "RationalMatrix":
        return cls([[0] * n_cols for _ in range(n_rows)], n_cols)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], n_rows: int | None = None) -> "RationalMatrix":
        if not columns:
            return cls([[] for _ in range(n_rows or 0)], 0)
        return cls(zip(*columns))

    @property
    def shape(self) -> tuple[int, int]:
        return self.n_rows, self.n_cols

    @property
    def rows(self) -> tuple[Vector, ...]:
        return self._rows

    def row(self, i: int) -> Vector:
        return self._rows[i]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self._rows)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.n_cols)]

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self._rows[i][j]

    def is_square(self) -> bool:
        return self.n_rows == self.n_cols

    @property
    def symmetric(self) -> bool:
        if not self.is_square():
            return False
        return all(self._rows[i][j] == self._rows[j][i] for i in range(self.n_rows) for j in range(i))

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(zip(*self._rows)) if self.n_rows else RationalMatrix.zeros(self.n_cols, 0)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "RationalMatrix":
        return RationalMatrix([[self._rows[i][j] for j in cols] for i in rows], len(cols))

    def principal(self, idx: Sequence[int]) -> "RationalMatrix":
        return self.submatrix(idx, idx)

    def delete(self, v: int) -> "RationalMatrix":
        """``A(v)``: remove row and column ``v``."""
        keep = [i for i in range(self.n_rows) if i != v]
        return self.principal(keep)

    def select_columns(self, cols: Sequence[int]) -> "RationalMatrix":
        return self.submatrix(range(self.n_rows), cols)

    def matvec(self, x: Sequence) -> Vector:
        if len(x) != self.n_cols:
            raise DomainError(f"vector length {len(x)} does not match {self.n_cols} columns")
        nz = [(j, _frac(v)) for j, v in enumerate(x) if v]
        return tuple(sum([r[j] * v for j, v in nz if r[j]], Fraction(0)) for r in self._rows)

    def __matmul__(self, other):
        if isinstance(other, RationalMatrix):
            if self.n_cols != other.n_rows:
                raise DomainError("dimension mismatch in matrix product")
            cols = other.columns()
            return RationalMatrix(
                [[sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in cols] for r in self._rows],
                other.n_cols,
            )
        return self.matvec(other)

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.shape != other.shape:
            raise DomainError("dimension mismatch in matrix sum")
        return RationalMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)], self.n_cols)

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.shape != other.shape:
            raise DomainError("dimension mismatch in matrix difference")
        return RationalMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)], self.n_cols)

    def with_entry(self, i: int, j: int, value) -> "RationalMatrix":
        rows = [list(r) for r in self._rows]
        rows[i][j] = _frac(value)
        return RationalMatrix(rows, self.n_cols)

    def to_lists(self) -> list[list[Fraction]]:
        return [list(r) for r in self._rows]

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalMatrix) and self.shape == other.shape and self._rows == other._rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.shape, self._rows))
        return self._hash

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in r) for r in self._rows)
        return f"RationalMatrix([{body}])"


def _integer_rows(rows: Iterable[Sequence[Fraction]]) -> list[list[int]]:
    out = []
    for r in rows:
        scale = lcm(*(x.denominator for x in r)) if r else 1
        out.append([int(x * scale) for x in r])
    return out


def _bareiss(m: list[list[int]]) -> tuple[int, int]:
    """Fraction-free elimination in place; returns ``(rank, sign * last pivot)``.

    For a square input of full rank the second value is the determinant.
    """
    n_rows = len(m)
    n_cols = len(m[0]) if m else 0
    prev = 1
    sign = 1
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        p = next((i for i in range(r, n_rows) if m[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            m[r], m[p] = m[p], m[r]
            sign = -sign
        piv = m[r][c]
        for i in range(r + 1, n_rows):
            mic = m[i][c]
            row_i = m[i]
            row_r = m[r]
            for j in range(c + 1, n_cols):
                row_i[j] = (row_i[j] * piv - mic * row_r[j]) // prev
            row_i[c] = 0
        prev = piv
        r += 1
    return r, sign * prev


def rank(a: RationalMatrix) -> int:
    if a.n_rows == 0 or a.n_cols == 0:
        return 0
    r, _ = _bareiss(_integer_rows(a.rows))
    return r


def nullity(a: RationalMatrix) -> int:
    return a.n_cols - rank(a)


def determinant(a: RationalMatrix) -> Fraction:
    if not a.is_square():
        raise DomainError("determinant of a non-square matrix")
    if a.n_rows == 0:
        return Fraction(1)
    scales = [lcm(*(x.denominator for x in r)) for r in a.rows]
    r, det = _bareiss(_integer_rows(a.rows))
    if r < a.n_rows:
        return Fraction(0)
    denom = 1
    for s in scales:
        denom *= s
    return Fraction(det, denom)


def is_nonsingular(a: RationalMatrix) -> bool:
    return a.is_square() and rank(a) == a.n_rows


def rref(a: RationalMatrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = a.to_lists()
    pivots: list[int] = []
    r = 0
    for c in range(a.n_cols):
        p = next((i for i in range(r, a.n_rows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(a.n_rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == a.n_rows:
            break
    return m, pivots


def primitive(v: Sequence[Fraction]) -> Vector:
    """Scale to coprime integers with a positive first nonzero entry."""
    scale = lcm(*(Fraction(x).denominator for x in v)) if v else 1
    ints = [int(Fraction(x) * scale) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        return tuple(Fraction(0) for _ in v)
    lead = next(x for x in ints if x != 0)
    if lead < 0:
        g = -g
    return tuple(Fraction(x // g) for x in ints)


def support(v: Sequence) -> frozenset[int]:
    return frozenset(i for i, x in enumerate(v) if x != 0)


@dataclass(frozen=True)
class NullBasis:
    vectors: tuple[Vector, ...]
    n: int

    @property
    def dimension(self) -> int:
        return len(self.vectors)

    def as_matrix(self) -> RationalMatrix:
        """The basis as the columns of an ``n x dim`` matrix."""
        return RationalMatrix.from_columns(self.vectors, self.n) if self.vectors else RationalMatrix.zeros(self.n, 0)


def null_basis(a: RationalMatrix) -> NullBasis:
    """Basis of ``N(A)``; one primitive integer vector per free column."""
    m, pivots = rref(a)
    free = [c for c in range(a.n_cols) if c not in pivots]
    vectors = []
    for f in free:
        x = [Fraction(0)] * a.n_cols
        x[f] = Fraction(1)
        for r, p in enumerate(pivots):
            x[p] = -m[r][f]
        vec = primitive(x)
        if any(y != 0 for y in a.matvec(vec)):
            raise ArithmeticError("null basis vector failed exact verification")
        vectors.append(vec)
    return NullBasis(tuple(vectors), a.n_cols)


def null_support(a: RationalMatrix) -> frozenset[int]:
    """Indices where some null vector is nonzero."""
    out: set[int] = set()
    for v in null_basis(a).vectors:
        out |= support(v)
    return frozenset(out)


def column_space_contains(a: RationalMatrix, v: Sequence) -> bool:
    augmented = RationalMatrix([list(r) + [_frac(x)] for r, x in zip(a.rows, v)])
    return rank(augmented) == rank(a)


def graph_of(a: RationalMatrix) -> Graph:
    """Graph whose edges are the nonzero off-diagonal entries of ``a``."""
    if not a.symmetric:
        raise DomainError("graph_of needs a symmetric matrix")
    n = a.n_rows
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if a[i, j] != 0])


@dataclass(frozen=True)
class SparkCertificate:
    """``spark`` with a witness null vector supported exactly on ``support``.

    A nonsingular (full column rank) matrix has ``spark = n_cols + 1`` and no
    witness.
    """

    spark: int
    support: frozenset[int]
    witness: Vector | None

    def to_dict(self) -> dict:
        return {
            "spark": self.spark,
            "support": sorted(self.support),
            "witness": None if self.witness is None else [str(x) for x in self.witness],
        }


def _circuit_vector(a: RationalMatrix, cols: Sequence[int]) -> Vector:
    sub = a.select_columns(cols)
    (vec,) = null_basis(sub).vectors
    full = [Fraction(0)] * a.n_cols
    for c, x in zip(cols, vec):
        full[c] = x
    return primitive(full)


def matrix_spark(a: RationalMatrix, use_fort_pruning: bool = True) -> SparkCertificate:
    """Fewest linearly dependent columns, with a witness null vector.

    Column subsets are scanned by size and then lexicographically.  For a
    symmetric matrix every null vector support is a fort of its graph, so
    non-fort subsets are skipped.
    """
    n = a.n_cols
    r = rank(a)
    if r == n:
        return SparkCertificate(n + 1, frozenset(), None)
    g = graph_of(a) if use_fort_pruning and a.symmetric else None
    for s in range(1, r + 2):
        for cols in combinations(range(n), s):
            if g is not None and not is_fort(g, cols):
                continue
            if rank(a.select_columns(cols)) < s:
                vec = _circuit_vector(a, cols)
                return SparkCertificate(s, frozenset(cols), vec)
    raise AssertionError("spark(A) <= rank(A) + 1 must hold")


def is_full_spark(a: RationalMatrix) -> bool:
    return matrix_spark(a).spark == rank(a) + 1


@dataclass
class FullSparkReport:
    """Outcome of checking ``spark(A) = rank(A) + 1`` three independent ways.

    ``principal_ok``: every ``k x k`` principal submatrix is nonsingular.
    ``null_minors_ok``: every maximal square row-submatrix of a null basis is
    nonsingular.  ``spark_ok``: the subset search gives spark ``k + 1``.
    """

    full_spark: bool
    rank: int
    spark: int
    principal_ok: bool
    null_minors_ok: bool
    spark_ok: bool
    singular_principal: list[tuple[int, ...]] = field(default_factory=list)
    singular_null_minors: list[tuple[int, ...]] = field(default_factory=list)
    smaller_singular_principal: list[tuple[int, ...]] = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return self.principal_ok == self.null_minors_ok == self.spark_ok

    def to_dict(self) -> dict:
        return {
            "full_spark": self.full_spark,
            "rank": self.rank,
            "spark": self.spark,
            "principal_ok": self.principal_ok,
            "null_minors_ok": self.null_minors_ok,
            "spark_ok": self.spark_ok,
            "consistent": self.consistent,
            "singular_principal": [list(s) for s in self.singular_principal],
            "singular_null_minors": [list(s) for s in self.singular_null_minors],
            "smaller_singular_principal": [list(s) for s in self.smaller_singular_principal],
        }


def full_spark_check(a: RationalMatrix, list_smaller: bool = True) -> FullSparkReport:
    """Decide full spark and cross-check the principal-minor and null-basis
    characterisations; violating index sets are listed in the report."""
    if not a.symmetric:
        raise DomainError("full_spark_check needs a symmetric matrix")
    n = a.n_rows
    k = rank(a)
    spark_value = matrix_spark(a).spark
    smaller = []
    if list_smaller:
        for s in range(1, k):
            smaller += [idx for idx in combinations(range(n), s) if not is_nonsingular(a.principal(idx))]
    if k == n:
        return FullSparkReport(True, k, spark_value, True, True, spark_value == n + 1,
                               smaller_singular_principal=smaller)
    bad_principal = [idx for idx in combinations(range(n), k) if not is_nonsingular(a.principal(idx))]
    x = null_basis(a).as_matrix()
    d = n - k
    bad_minors = [idx for idx in combinations(range(n), d) if not is_nonsingular(x.submatrix(idx, range(d)))]
    spark_ok = spark_value == k + 1
    return FullSparkReport(
        full_spark=spark_ok,
        rank=k,
        spark=spark_value,
        principal_ok=not bad_principal,
        null_minors_ok=not bad_minors,
        spark_ok=spark_ok,
        singular_principal=bad_principal,
        singular_null_minors=bad_minors,
        smaller_singular_principal=smaller,
    )


class VertexKind(str, enum.Enum):
    PARTER = "parter"
    FIEDLER = "fiedler_not_parter"
    NEITHER = "neither"


@dataclass(frozen=True)
class VertexClassification:
    kind: VertexKind
    nullity: int
    deleted_nullity: int
    nonsingular: bool

    @property
    def is_fiedler(self) -> bool:
        return self.kind in (VertexKind.PARTER, VertexKind.FIEDLER)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "nullity": self.nullity,
            "deleted_nullity": self.deleted_nullity,
            "nonsingular": self.nonsingular,
        }


def parter_fiedler(a: RationalMatrix, v: int) -> VertexClassification:
    """Classify ``v`` by comparing ``nul(A(v))`` with ``nul(A)``.

    Parter: ``nul(A(v)) = nul(A) + 1``.  Fiedler: ``nul(A(v)) >= nul(A)``.
    For nonsingular ``A`` the Fiedler inequality holds trivially; such vertices
    are reported as ``fiedler_not_parter`` with ``nonsingular`` set.
    """
    if not a.symmetric:
        raise DomainError("parter_fiedler needs a symmetric matrix")
    if not 0 <= v < a.n_rows:
        raise DomainError(f"vertex {v} out of range")
    nul = nullity(a)
    sub = a.delete(v)
    nul_v = nullity(sub) if sub.n_rows else 0
    if nul_v == nul + 1:
        kind = VertexKind.PARTER
    elif nul_v >= nul:
        kind = VertexKind.FIEDLER
    else:
        kind = VertexKind.NEITHER
    return VertexClassification(kind, nul, nul_v, nul == 0)


def is_generic(x: RationalMatrix, limit: int = DEFAULT_GENERIC_LIMIT) -> bool:
    """True iff every square submatrix of ``x`` (all sizes) is nonsingular."""
    m = min(x.n_rows, x.n_cols)
    if m > limit:
        raise CapacityError(f"exhaustive minor check limited to min dimension {limit} (got {m})")
    for s in range(1, m + 1):
        for rows in combinations(range(x.n_rows), s):
            for cols in combinations(range(x.n_cols), s):
                if determinant(x.submatrix(rows, cols)) == 0:
                    return False
    return True


def generic_null_basis(
    a: RationalMatrix,
    k: int | None = None,
    trials: int = 32,
    bound: int = 100,
    seed: int = 0,
    limit: int = DEFAULT_GENERIC_LIMIT,
) -> RationalMatrix | None:
    """An ``n x k`` generic matrix ``X`` with ``A X = 0``, or ``None`` if none
    was found.

    The echelon null basis ``X0`` usually has zero entries, so it is tried as
    is only when ``k`` equals the nullity; otherwise, and after that, ``X0 R``
    is tried for random integer ``R`` with entries in ``[-bound, bound]``.
    """
    basis = null_basis(a)
    d = basis.dimension
    k = d if k is None else k
    if not 0 < k <= d:
        return None
    if k > limit:
        raise CapacityError(f"generic check limited to {limit} columns (got {k})")
    x = basis.as_matrix()
    if k == d and is_generic(x, limit):
        return x
    rng = random.Random(seed)
    for _ in range(trials):
        r = RationalMatrix([[rng.randint(-bound, bound) for _ in range(k)] for _ in range(d)])
        if rank(r) < k:
            continue
        candidate = x @ r
        if is_generic(candidate, limit):
            return candidate
    return None


def generic_nullity(
    a: RationalMatrix,
    trials: int = 32,
    bound: int = 100,
    seed: int = 0,
    limit: int = DEFAULT_GENERIC_LIMIT,
) -> int:
    """Certified lower bound on the generic nullity of ``a``.

    Tries ``k = nul(A), nul(A) - 1, ...`` with :func:`generic_null_basis` and
    returns the first ``k`` that has a witness.  A larger true value cannot be
    ruled out by sampling, so the result means "at least k".
    """
    d = nullity(a)
    if d > limit:
        raise CapacityError(f"generic nullity limited to nullity <= {limit} (got {d})")
    for k in range(d, 0, -1):
        if generic_null_basis(a, k, trials, bound, seed, limit) is not None:
            return k
    return 0


def is_positive_semidefinite(a: RationalMatrix) -> bool:
    """Exact LDL^T test (symmetric Gaussian elimination without pivoting)."""
    if not a.symmetric:
        return False
    m = a.to_lists()
    n = a.n_rows
    for i in range(n):
        piv = m[i][i]
        if piv < 0:
            return False
        if piv == 0:
            if any(m[i][j] != 0 for j in range(i + 1, n)):
                return False
            continue
        for r in range(i + 1, n):
            f = m[r][i] / piv
            if f:
                for c in range(i + 1, n):
                    m[r][c] -= f * m[i][c]
    return True
