import random
from itertools import combinations
from math import ceil, comb

import pytest

from graphspark.corpus import connected_graphs, random_connected_graph, random_graph
from graphspark.errors import CapacityError
from graphspark.families import complete, cycle, friendship, hypercube3, path, spider
from graphspark.forts import (
    failed_zero_forcing_number,
    failed_zero_forcing_number_exhaustive,
    fort_sequence,
    is_fort,
    is_zero_forcing_set,
    spark,
    spark_branch_and_bound,
    spark_brute_force,
    zero_blocking_number,
    zf_closure,
)
from graphspark.graph import Graph


def _oracle_forts(g: Graph):
    """Forts straight from the definition, no bit tricks."""
    out = []
    for s in range(1, g.n + 1):
        for f in combinations(range(g.n), s):
            fs = set(f)
            if all(len(g.neighbors(v) & fs) != 1 for v in range(g.n) if v not in fs):
                out.append(frozenset(f))
    return out


def _oracle_closure(g: Graph, blue, order):
    blue = set(blue)
    changed = True
    while changed:
        changed = False
        for v in order:
            if v in blue:
                white = g.neighbors(v) - blue
                if len(white) == 1:
                    blue |= white
                    changed = True
    return blue


def test_is_fort_basics(example_graph):
    assert is_fort(example_graph, {0, 1})
    assert not is_fort(example_graph, {0})
    assert not is_fort(example_graph, set())
    assert is_fort(example_graph, range(5))


def test_sequence_matches_oracle():
    rng = random.Random(3)
    graphs = [g for n in range(2, 6) for g in connected_graphs(n)]
    graphs += [random_graph(rng, rng.randint(2, 9)) for _ in range(40)]
    for g in graphs:
        forts = _oracle_forts(g)
        seq = fort_sequence(g, emit=True)
        assert seq.singletons == sum(1 for f in forts if len(f) == 1)
        assert list(seq.counts) == [sum(1 for f in forts if len(f) == s) for s in range(2, g.n + 1)]
        assert set(seq.forts) == set(forts)


@pytest.mark.parametrize("n", range(2, 9))
def test_complete_sequence(n):
    assert fort_sequence(complete(n)).counts == tuple(comb(n, i) for i in range(2, n + 1))


def test_friendship_sequence():
    assert fort_sequence(friendship(3)).counts == (3, 0, 11, 12, 7, 1)


def test_capacity_limit():
    with pytest.raises(CapacityError):
        fort_sequence(path(17))
    assert fort_sequence(path(17), limit=17).n == 17


@pytest.mark.parametrize("m", range(4, 11))
def test_spider_gap(m):
    seq = fort_sequence(spider(m, 1, 1))
    first = ceil((m + 3) / 2)
    assert seq.count(2) == 1
    assert all(seq.count(i) == 0 for i in range(3, first))
    assert all(seq.count(i) > 0 for i in range(first, m + 4))


def test_path_spark():
    for n in range(2, 15):
        expected = ceil((n + 1) / 2)
        assert spark_branch_and_bound(path(n)).size == expected
        if n <= 10:
            assert spark_brute_force(path(n)).size == expected


def test_minimum_fort_is_a_fort_and_lexicographic():
    rng = random.Random(11)
    for _ in range(100):
        g = random_connected_graph(rng, rng.randint(2, 9))
        bf, bb = spark_brute_force(g), spark_branch_and_bound(g)
        assert is_fort(g, bb.minimum_fort)
        assert bb.size == bf.size == len(bb.minimum_fort)
        assert bb.minimum_fort == bf.minimum_fort


def test_branch_and_bound_random_up_to_16():
    rng = random.Random(5)
    for _ in range(500):
        n = rng.randint(2, 16)
        g = random_graph(rng, n, rng.uniform(0.15, 0.9))
        bb = spark_branch_and_bound(g)
        assert is_fort(g, bb.minimum_fort)
        seq = fort_sequence(g)
        smallest = 1 if seq.singletons else next(i + 2 for i, c in enumerate(seq.counts) if c)
        assert bb.size == smallest


@pytest.mark.slow
def test_branch_and_bound_exhaustive_8():
    for n in range(2, 9):
        for g in connected_graphs(n):
            assert spark(g).size == spark_brute_force(g).size


def test_closure_order_independent():
    rng = random.Random(2)
    for _ in range(150):
        g = random_graph(rng, rng.randint(1, 10), rng.random())
        blue = [v for v in range(g.n) if rng.random() < 0.3]
        ref = frozenset(_oracle_closure(g, blue, list(range(g.n))))
        for _ in range(3):
            order = list(range(g.n))
            rng.shuffle(order)
            assert frozenset(_oracle_closure(g, blue, order)) == ref
        assert zf_closure(g, blue) == ref
        rest = set(range(g.n)) - ref
        assert not rest or is_fort(g, rest)


def test_zero_forcing_examples():
    assert is_zero_forcing_set(path(6), [0])
    assert not is_zero_forcing_set(path(6), [2])
    assert is_zero_forcing_set(cycle(5), [0, 1])
    assert zf_closure(complete(4), [0, 1]) == frozenset({0, 1})


def test_failed_forcing_identity():
    rng = random.Random(9)
    graphs = [hypercube3(), friendship(3), spider(4, 1, 1)]
    graphs += [random_connected_graph(rng, rng.randint(2, 8)) for _ in range(60)]
    for g in graphs:
        s = spark(g).size
        assert failed_zero_forcing_number_exhaustive(g) == failed_zero_forcing_number(g) == g.n - s
        assert zero_blocking_number(g) == s


def test_pinned_sparks():
    assert spark(path(5)).size == 3
    assert spark(cycle(7)).size == 4
    assert spark(complete(6)).size == 2
    assert spark(hypercube3()).size == spark_brute_force(hypercube3()).size == 3
    assert spark(friendship(3)).size == 2


def test_failed_forcing_examples(example_graph):
    assert failed_zero_forcing_number(example_graph) == 3
    assert failed_zero_forcing_number_exhaustive(example_graph) == 3
    for n in range(2, 8):
        assert failed_zero_forcing_number(complete(n)) == n - 2
    assert failed_zero_forcing_number(path(3)) == 1


def test_isolated_vertex_is_the_fort():
    g = Graph.from_edges(4, [(0, 1), (1, 2)])
    report = spark(g)
    assert report.size == 1 and report.minimum_fort == frozenset({3})
    assert spark_brute_force(g).minimum_fort == frozenset({3})
    assert spark(Graph.empty(1)).size == 1
