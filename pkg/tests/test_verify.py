import pytest

from graphspark.corpus import connected_graphs
from graphspark.errors import DomainError, ParseError
from graphspark.graph6 import encode_graph6
from graphspark.verify import SUITES, parse_corpus, run_verify

GRAPH_SUITES = [name for name, s in SUITES.items() if s.kind == "graph"]
MATRIX_SUITES = [name for name, s in SUITES.items() if s.kind == "matrix"]


def test_suite_ids():
    assert set(SUITES) == {"2.2", "2.3", "2.4", "2.6", "3.1", "3.2", "3.3", "4.3-forward",
                           "4.2-on-instances", "5.1", "6.1", "6.4", "6.6"}


@pytest.mark.parametrize("name", GRAPH_SUITES)
def test_graph_suites_exhaustive(name):
    report = run_verify(name, "exhaustive:5")
    assert report.cases == 1 + 1 + 2 + 6 + 21
    assert report.passed, report.violations[:3]


@pytest.mark.parametrize("name", MATRIX_SUITES)
def test_matrix_suites_random(name):
    report = run_verify(name, "random:25:6", seed=3)
    assert report.cases > 0
    assert report.passed, report.violations[:3]


def test_support_direction_of_fort_suite():
    report = run_verify("2.2", "random:60:7", seed=1)
    assert report.cases == 60 and report.passed


def test_replayable():
    a = run_verify("3.1", "random:20:6", seed=42).to_dict()
    b = run_verify("3.1", "random:20:6", seed=42).to_dict()
    a.pop("elapsed"), b.pop("elapsed")
    assert a == b


def test_file_corpus(tmp_path):
    p = tmp_path / "c.g6"
    p.write_text("\n".join(encode_graph6(g) for g in connected_graphs(5)) + "\n")
    report = run_verify("5.1", f"file:{p}")
    assert report.cases == 21 and report.passed


def test_threads_match_serial():
    serial = run_verify("2.6", "exhaustive:6", threads=1)
    parallel = run_verify("2.6", "exhaustive:6", threads=2)
    assert serial.cases == parallel.cases and serial.violations == parallel.violations


def test_bad_inputs():
    with pytest.raises(DomainError):
        run_verify("9.9", "exhaustive:3")
    with pytest.raises(DomainError):
        run_verify("3.1", "exhaustive:3")
    with pytest.raises(ParseError):
        parse_corpus("random:5")
    with pytest.raises(ParseError):
        parse_corpus("exhaustive:x")
    with pytest.raises(ParseError):
        parse_corpus("file:/nonexistent/path.g6")


def test_parse_corpus():
    assert parse_corpus("exhaustive:7") == ("exhaustive", (1, 7))
    assert parse_corpus("exhaustive:3-5") == ("exhaustive", (3, 5))
    assert parse_corpus("random:10:6") == ("random", (10, 6))
