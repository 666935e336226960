"""Theorem verification suites over graph corpora and seeded random matrices.

Each suite maps one case (a graph or a matrix) to a list of violation
messages.  Graph suites take ``exhaustive:N`` (connected graphs up to
isomorphism, orders 1..N, or ``exhaustive:A-B``), ``file:PATH`` (graph6
lines) or ``random:COUNT:NMAX``.  Matrix suites only accept ``random``
corpora.  Random cases are drawn in the parent process from ``seed``, so a
report plus its seed replays exactly.
"""

from __future__ import annotations

import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb
from pathlib import Path
from typing import Callable

from . import sampling
from .connectivity import vertex_connectivity
from .constructions import FortVectorAssignment, border, matrix_from_fort, rank_bump
from .corpus import exhaustive, graph6_file, random_connected_graph
from .errors import DomainError, ParseError
from .forts import (
    failed_zero_forcing_number_exhaustive,
    fort_sequence,
    is_fort,
    is_zero_forcing_set,
    spark,
    spark_brute_force,
)
from .graph import Graph, duplicate_vertices
from .graph6 import encode_graph6
from .linalg import (
    RationalMatrix,
    column_space_contains,
    determinant,
    full_spark_check,
    generic_null_basis,
    generic_nullity,
    graph_of,
    is_generic,
    is_positive_semidefinite,
    matrix_spark,
    null_basis,
    null_support,
    parter_fiedler,
    rank,
    support,
)
from .matio import matrix_to_json


@dataclass
class VerifyReport:
    suite: str
    corpus: str
    seed: int
    cases: int = 0
    violations: list[dict] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "corpus": self.corpus,
            "seed": self.seed,
            "cases": self.cases,
            "violations": self.violations,
            "elapsed": round(self.elapsed, 3),
            "passed": self.passed,
        }


# --- graph suites -----------------------------------------------------------

def check_fort_to_matrix(g: Graph) -> list[str]:
    """Every fort yields a matrix in S(G) with the prescribed null vector."""
    out = []
    seq = fort_sequence(g, emit=True)
    rng = random.Random(encode_graph6(g))
    for f in seq.forts:
        ones = [Fraction(1)] * len(f)
        scrambled = [Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 3)) for _ in f]
        for xs in (ones, scrambled):
            fva = FortVectorAssignment.from_lists(sorted(f), xs)
            try:
                a = matrix_from_fort(g, fva)
            except Exception as exc:  # reported, not raised: the suite must keep going
                out.append(f"fort {sorted(f)}: construction failed: {exc}")
                continue
            x = fva.vector(g.n)
            if any(y != 0 for y in a.matvec(x)):
                out.append(f"fort {sorted(f)}: A x != 0")
            if graph_of(a) != g:
                out.append(f"fort {sorted(f)}: pattern mismatch")
    return out


def check_all_subsets_forts(g: Graph) -> list[str]:
    """(n-m+1)-subsets are all forts iff m <= min degree."""
    n = g.n
    delta = g.min_degree()
    if delta == 0:
        return []  # stated for graphs without isolated vertices
    seq = fort_sequence(g)
    out = []
    for m in range(1, n + 1):
        size = n - m + 1
        all_forts = seq.count(size) == comb(n, size)
        if all_forts != (m <= delta):
            out.append(f"m={m}: all {size}-subsets forts={all_forts}, delta={delta}")
    return out


def check_fort_upward(g: Graph) -> list[str]:
    seq = fort_sequence(g)
    n = g.n
    out = []
    for k in range(1, n):
        if seq.count(k) == comb(n, k) and seq.count(k + 1) != comb(n, k + 1):
            out.append(f"every {k}-subset is a fort but not every {k + 1}-subset")
    return out


def check_failed_forcing(g: Graph) -> list[str]:
    out = []
    rep = spark(g)
    failed = failed_zero_forcing_number_exhaustive(g)
    if failed != g.n - rep.size:
        out.append(f"failed(G)={failed} but n - spark = {g.n - rep.size}")
    complement = [v for v in range(g.n) if v not in rep.minimum_fort]
    if is_zero_forcing_set(g, complement):
        out.append("complement of a minimum fort forces the graph")
    brute = spark_brute_force(g)
    if brute.size != rep.size or brute.minimum_fort != rep.minimum_fort:
        out.append(f"branch-and-bound {rep.to_dict()} != brute force {brute.to_dict()}")
    return out


def check_duplicates(g: Graph) -> list[str]:
    s = spark(g).size
    pair = duplicate_vertices(g)
    if (s == 2) != (pair is not None):
        return [f"spark={s} but duplicate pair={pair}"]
    if pair is not None and not is_fort(g, pair):
        return [f"duplicate pair {pair} is not a fort"]
    return []


# --- matrix suites ----------------------------------------------------------

def check_support_is_fort(case: tuple[Graph, RationalMatrix]) -> list[str]:
    g, a = case
    out = []
    vectors = list(null_basis(a).vectors)
    cert = matrix_spark(a, use_fort_pruning=False)
    if cert.witness is not None:
        vectors.append(cert.witness)
    if len(vectors) > 1:
        combo = [sum((Fraction(i + 2) * v[c] for i, v in enumerate(vectors)), Fraction(0)) for c in range(g.n)]
        if any(combo):
            vectors.append(tuple(combo))
    for v in vectors:
        if not is_fort(g, support(v)):
            out.append(f"null vector support {sorted(support(v))} is not a fort")
    return out


def check_full_spark_equivalence(a: RationalMatrix) -> list[str]:
    rep = full_spark_check(a, list_smaller=False)
    if not rep.consistent:
        return [
            f"principal_ok={rep.principal_ok} null_minors_ok={rep.null_minors_ok} spark_ok={rep.spark_ok}"
            f" (rank {rep.rank}, spark {rep.spark})"
        ]
    return []


def check_border(case: tuple[RationalMatrix, tuple[Fraction, ...]]) -> list[str]:
    a, x = case
    b = border(a, x)
    out = []
    if rank(b) != rank(a):
        out.append(f"rank(B)={rank(b)} != rank(A)={rank(a)}")
    if any(b.matvec((Fraction(-1), *x))):
        out.append("(-1, x) is not a null vector of B")
    k = len(support(x))
    s = matrix_spark(b).spark
    if s > k + 1:
        out.append(f"spark(B)={s} > |supp x| + 1 = {k + 1}")
    if rank(a) == a.n_rows and s != k + 1:
        out.append(f"A nonsingular but spark(B)={s} != {k + 1}")
    return out


def check_rank_bump(a: RationalMatrix) -> list[str]:
    b = rank_bump(a)
    out = []
    if rank(b) != rank(a) + 1:
        out.append(f"rank {rank(a)} -> {rank(b)}")
    sa, sb = matrix_spark(a).spark, matrix_spark(b).spark
    if sa != sb:
        out.append(f"spark {sa} -> {sb}")
    if graph_of(a) != graph_of(b):
        out.append("pattern changed")
    return out


def check_connectivity_forward(a: RationalMatrix) -> list[str]:
    """A full-spark matrix of rank k has an (n-k)-connected graph."""
    k = rank(a)
    # Rank 0 (the zero matrix) is degenerate: no cut set of n - 1 vertices
    # can leave two components, so the argument needs k >= 1.
    if k == 0 or matrix_spark(a).spark != k + 1:
        return []
    kappa = vertex_connectivity(graph_of(a))
    if kappa < a.n_rows - k:
        return [f"full spark rank {k}, n {a.n_rows}, but kappa={kappa}"]
    return []


def check_psd_connectivity(a: RationalMatrix) -> list[str]:
    if not is_positive_semidefinite(a):
        return ["instance is not positive semidefinite"]
    g = graph_of(a)
    n = a.n_rows
    if rank(a) < n - vertex_connectivity(g):
        s = matrix_spark(a).spark
        bound = n - g.min_degree() - 1
        if s > bound:
            return [f"rank {rank(a)} < n - kappa but spark {s} > n - delta - 1 = {bound}"]
    return []


def check_fiedler_support(a: RationalMatrix) -> list[str]:
    out = []
    supp = null_support(a)
    for v in range(a.n_rows):
        fied = parter_fiedler(a, v).is_fiedler
        if fied != (v not in supp):
            out.append(f"vertex {v}: fiedler={fied}, in null support={v in supp}")
        e = [0] * a.n_rows
        e[v] = 1
        if column_space_contains(a, e) != (v not in supp):
            out.append(f"vertex {v}: e_v in col(A) disagrees with null support")
    return out


def check_tree_equivalence(case: tuple[Graph, RationalMatrix]) -> list[str]:
    t, a = case
    k = rank(a)
    full = matrix_spark(a).spark == k + 1
    full_support = len(null_support(a)) == t.n
    no_parter = all(parter_fiedler(a, v).kind.value != "parter" for v in range(t.n))
    if not (full == full_support == no_parter):
        return [f"full_spark={full} full_support={full_support} no_parter={no_parter}"]
    return []


def check_generic(a: RationalMatrix) -> list[str]:
    k = rank(a)
    n = a.n_rows
    if k == n or matrix_spark(a).spark != k + 1:
        return []
    out = []
    # Only the maximal minors of an arbitrary basis are guaranteed nonzero;
    # genericity in all sizes is witnessed by a recombined basis.
    x0 = null_basis(a).as_matrix()
    d = n - k
    if any(determinant(x0.submatrix(rows, range(d))) == 0 for rows in combinations(range(n), d)):
        out.append("null basis has a singular maximal minor")
    x = generic_null_basis(a)
    if x is None or not is_generic(x):
        out.append("no generic null basis found for a full-spark matrix")
    gn = generic_nullity(a)
    if gn < n - k:
        out.append(f"generic nullity {gn} < n - rank = {n - k}")
    return out


# --- sample builders for matrix suites --------------------------------------

def _border_sample(rng: random.Random, nmax: int):
    a = sampling.symmetric_sample(rng, nmax)
    while True:
        x = tuple(Fraction(rng.choice([0, 0, 1, -1, 2, -3])) for _ in range(a.n_rows))
        if any(x):
            return a, x


def _full_spark_pool(rng: random.Random, count: int, nmax: int) -> list[RationalMatrix]:
    pool = []
    for _ in range(count):
        pool.append(sampling.singular_symmetric_sample(rng, nmax))
    for _ in range(count // 2):
        a = sampling.nullity_two_sample(rng, nmax)
        pool += [a, rank_bump(a)]
    for _ in range(count // 2):
        pool.append(sampling.singular_pattern_sample(rng, nmax)[1])
    return pool


@dataclass(frozen=True)
class Suite:
    name: str
    kind: str  # "graph" or "matrix"
    check: Callable
    sampler: Callable | None = None
    description: str = ""


def _per_case(fn):
    def build(rng, count, nmax):
        return [fn(rng, nmax) for _ in range(count)]
    return build


SUITES: dict[str, Suite] = {
    "2.2": Suite("2.2", "graph", check_fort_to_matrix,
                 _per_case(sampling.singular_pattern_sample),
                 "forts give matrices with fort-supported null vectors; null supports are forts"),
    "2.3": Suite("2.3", "graph", check_all_subsets_forts, description="all (n-m+1)-subsets forts iff m <= delta"),
    "2.4": Suite("2.4", "graph", check_fort_upward, description="all k-subsets forts implies all (k+1)-subsets forts"),
    "2.6": Suite("2.6", "graph", check_failed_forcing, description="failed(G) = n - spark(G)"),
    "3.1": Suite("3.1", "matrix", check_full_spark_equivalence, _per_case(sampling.singular_symmetric_sample),
                 "principal minors, null-basis minors and spark agree"),
    "3.2": Suite("3.2", "matrix", check_border, _per_case(_border_sample), "bordered matrix rank and spark"),
    "3.3": Suite("3.3", "matrix", check_rank_bump, _per_case(sampling.nullity_two_sample),
                 "diagonal rank bump keeps spark"),
    "4.3-forward": Suite("4.3-forward", "matrix", check_connectivity_forward, _full_spark_pool,
                         "full spark rank k implies (n-k)-connected"),
    "4.2-on-instances": Suite("4.2-on-instances", "matrix", check_psd_connectivity, _per_case(sampling.psd_sample),
                              "PSD rank below n - kappa forces spark <= n - delta - 1"),
    "5.1": Suite("5.1", "graph", check_duplicates, description="spark 2 iff duplicate vertices"),
    "6.1": Suite("6.1", "matrix", check_fiedler_support, _per_case(sampling.singular_symmetric_sample),
                 "Fiedler vertices are exactly those outside the null support"),
    "6.4": Suite("6.4", "matrix", check_tree_equivalence, _per_case(sampling.singular_tree_sample),
                 "trees: full spark iff full null support iff no Parter vertex"),
    "6.6": Suite("6.6", "matrix", check_generic, _full_spark_pool, "full spark null bases are generic"),
}


def parse_corpus(spec: str) -> tuple[str, tuple]:
    """Split a corpus spec into ``(kind, args)``."""
    if spec.startswith("exhaustive:"):
        body = spec.split(":", 1)[1]
        lo, _, hi = body.partition("-")
        try:
            return ("exhaustive", (int(lo), int(hi)) if hi else (1, int(lo)))
        except ValueError:
            raise ParseError(f"bad exhaustive corpus {spec!r}") from None
    if spec.startswith("random:"):
        parts = spec.split(":")[1:]
        try:
            count, nmax = int(parts[0]), int(parts[1])
        except (ValueError, IndexError):
            raise ParseError(f"bad random corpus {spec!r}; expected random:COUNT:NMAX") from None
        return ("random", (count, nmax))
    path = spec[5:] if spec.startswith("file:") else spec
    if not Path(path).is_file():
        raise ParseError(f"corpus file not found: {path}")
    return ("file", (path,))


def _graph_case_id(g: Graph) -> dict:
    return {"graph6": encode_graph6(g)}


def _matrix_case_id(case) -> dict:
    if isinstance(case, tuple):
        g, rest = case
        if isinstance(g, Graph):
            return {"graph6": encode_graph6(g), "matrix": matrix_to_json(rest)}
        return {"matrix": matrix_to_json(g), "x": [str(v) for v in rest]}
    return {"matrix": matrix_to_json(case)}


def build_cases(suite: Suite, corpus: str, seed: int) -> list:
    kind, args = parse_corpus(corpus)
    if suite.kind == "graph":
        if kind == "exhaustive":
            return list(exhaustive(args[1], args[0]))
        if kind == "file":
            return list(graph6_file(args[0]))
        count, nmax = args
        rng = random.Random(seed)
        if suite.sampler is not None:
            return suite.sampler(rng, count, nmax)
        return [random_connected_graph(rng, rng.randint(2, nmax)) for _ in range(count)]
    if kind != "random":
        raise DomainError(f"suite {suite.name} needs a random:COUNT:NMAX corpus")
    count, nmax = args
    return suite.sampler(random.Random(seed), count, nmax)


def _run_check(check, case):
    return check(case)


def _graph_suite_check(suite: Suite, case) -> Callable:
    # Suite 2.2 switches direction with the corpus: graphs -> fort matrices,
    # sampled (graph, matrix) pairs -> supports are forts.
    if suite.name == "2.2" and isinstance(case, tuple):
        return check_support_is_fort
    return suite.check


def thread_count() -> int:
    try:
        return max(1, int(os.environ.get("GRAPHSPARK_THREADS", "1")))
    except ValueError:
        return 1


def run_verify(suite_name: str, corpus: str, seed: int = 0, threads: int | None = None) -> VerifyReport:
    if suite_name not in SUITES:
        raise DomainError(f"unknown suite {suite_name!r}; choose from {', '.join(SUITES)}")
    suite = SUITES[suite_name]
    start = time.perf_counter()
    cases = build_cases(suite, corpus, seed)
    checks = [_graph_suite_check(suite, c) for c in cases]
    threads = thread_count() if threads is None else threads
    if threads > 1 and len(cases) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_run_check, checks, cases, chunksize=max(1, len(cases) // (4 * threads))))
    else:
        results = [check(case) for check, case in zip(checks, cases)]
    report = VerifyReport(suite_name, corpus, seed, cases=len(cases))
    for index, (case, messages) in enumerate(zip(cases, results)):
        ident = _graph_case_id(case) if isinstance(case, Graph) else _matrix_case_id(case)
        for msg in messages:
            report.violations.append({"case": index, **ident, "detail": msg})
    report.elapsed = time.perf_counter() - start
    return report
