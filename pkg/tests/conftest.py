from fractions import Fraction

import pytest

from graphspark.graph import Graph
from graphspark.linalg import RationalMatrix

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def example_graph():
    """5-cycle 1-2-3-4-5 plus chords 13 and 25, relabelled to 0..4."""
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2), (1, 4)])


@pytest.fixture
def example_matrix():
    return RationalMatrix([
        [1, 1, 1, 0, 1],
        [1, 1, 1, 0, 1],
        [1, 1, 3, 1, 0],
        [0, 0, 1, 3, 1],
        [1, 1, 0, 1, 3],
    ])


@pytest.fixture
def k23_matrix():
    return RationalMatrix([
        [0, 0, 3, 1, 4],
        [0, 2, 4, 4, 4],
        [3, 4, -4, 0, 0],
        [1, 4, 0, 4, 0],
        [4, 4, 0, 0, 8],
    ])


def frac_vec(*xs):
    return tuple(Fraction(x) for x in xs)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
