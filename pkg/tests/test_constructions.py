import random
from fractions import Fraction

import pytest

from graphspark.constructions import (
    FortVectorAssignment,
    adjacency,
    border,
    laplacian,
    matrix_from_fort,
    rank_bump,
    rank_bump_details,
    same_pattern,
)
from graphspark.corpus import connected_graphs, random_connected_graph
from graphspark.errors import DomainError, PreconditionError
from graphspark.families import complete, cycle, friendship, path, spider
from graphspark.forts import fort_sequence, is_fort
from graphspark.linalg import RationalMatrix, graph_of, matrix_spark, nullity, rank, support
from graphspark.sampling import nullity_two_sample, singular_symmetric_sample


def _annihilates(a, x):
    return all(y == 0 for y in a.matvec(x))


def test_laplacian_and_adjacency():
    lap = laplacian(cycle(4))
    assert lap[0, 0] == 2 and lap[0, 1] == -1 and lap[0, 2] == 0
    assert _annihilates(lap, [1, 1, 1, 1])
    assert graph_of(adjacency(friendship(2))) == friendship(2)


def test_from_fort_every_fort_small():
    for n in range(2, 6):
        for g in connected_graphs(n):
            for f in fort_sequence(g, emit=True).forts:
                fva = FortVectorAssignment.ones(f)
                a = matrix_from_fort(g, fva)
                assert graph_of(a) == g
                assert _annihilates(a, fva.vector(g.n))


def test_from_fort_rational_values():
    rng = random.Random(0)
    for _ in range(60):
        g = random_connected_graph(rng, rng.randint(2, 8))
        forts = fort_sequence(g, emit=True).forts
        f = sorted(rng.choice(forts))
        values = [Fraction(rng.choice([-1, 1]) * rng.randint(1, 9), rng.randint(1, 5)) for _ in f]
        fva = FortVectorAssignment.from_lists(f, values)
        a = matrix_from_fort(g, fva)
        assert a.symmetric and graph_of(a) == g
        assert _annihilates(a, fva.vector(g.n))
        assert support(fva.vector(g.n)) == frozenset(f)


def test_from_fort_example_pair(example_graph):
    fva = FortVectorAssignment.from_lists([0, 1], [1, -1])
    a = matrix_from_fort(example_graph, fva)
    assert _annihilates(a, [1, -1, 0, 0, 0])
    assert matrix_spark(a).spark == 2


def test_from_fort_rejects():
    g = path(4)
    with pytest.raises(DomainError):
        matrix_from_fort(g, FortVectorAssignment.ones({1}))
    with pytest.raises(DomainError):
        matrix_from_fort(g, FortVectorAssignment.ones({7}))
    with pytest.raises(DomainError):
        FortVectorAssignment.from_lists([0, 2], [1, 0])
    with pytest.raises(DomainError):
        FortVectorAssignment.from_lists([0, 2], [1])


def test_border():
    rng = random.Random(1)
    for _ in range(60):
        a = singular_symmetric_sample(rng, 6)
        x = [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(a.n_rows)]
        b = border(a, x)
        assert b.symmetric and b.shape == (a.n_rows + 1,) * 2
        assert rank(b) == rank(a)
        assert _annihilates(b, [-1, *x])
        assert matrix_spark(b).spark <= matrix_spark(a).spark
    with pytest.raises(DomainError):
        border(RationalMatrix.identity(2), [1])


def test_rank_bump():
    rng = random.Random(2)
    for _ in range(60):
        a = nullity_two_sample(rng, 7)
        res = rank_bump_details(a)
        b = res.matrix
        assert rank(b) == rank(a) + 1
        assert matrix_spark(b).spark == matrix_spark(a).spark
        assert same_pattern(a, b)
        assert len(res.kept_null_vectors) == nullity(b)
        assert rank(RationalMatrix(list(res.kept_null_vectors))) == nullity(b)
        assert all(_annihilates(b, v) for v in res.kept_null_vectors)
        # only the chosen diagonal entry moves
        diff = b - a
        assert diff[res.index, res.index] == 1
        assert sum(1 for r in diff.rows for v in r if v) == 1


def test_rank_bump_precondition():
    with pytest.raises(PreconditionError):
        rank_bump(laplacian(path(3)))
    with pytest.raises(DomainError):
        rank_bump(RationalMatrix([[0, 1, 0], [0, 0, 0], [0, 0, 0]]))


def test_rank_bump_zero_matrix():
    b = rank_bump(RationalMatrix.zeros(3, 3))
    assert rank(b) == 1 and matrix_spark(b).spark == 1


def test_whole_vertex_set_changes_only_the_diagonal():
    rng = random.Random(3)
    for _ in range(20):
        g = random_connected_graph(rng, rng.randint(2, 8))
        a = matrix_from_fort(g, FortVectorAssignment.ones(range(g.n)))
        adj = adjacency(g)
        assert all(a[i, j] == adj[i, j] for i in range(g.n) for j in range(g.n) if i != j)
        assert _annihilates(a, [1] * g.n)


def test_laplacian_kills_ones():
    from graphspark.corpus import random_graph

    rng = random.Random(4)
    for _ in range(100):
        g = random_graph(rng, rng.randint(1, 10), rng.random())
        assert _annihilates(laplacian(g), [1] * g.n)
