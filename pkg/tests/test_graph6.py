import networkx as nx
import pytest
from hypothesis import given

from graphspark.corpus import connected_graphs
from graphspark.errors import ParseError
from graphspark.families import complete, path
from graphspark.graph import Graph
from graphspark.graph6 import encode_graph6, parse_graph6
from test_graph import graphs


def _nx_bytes(g: Graph) -> str:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return nx.to_graph6_bytes(h, header=False).decode().strip()


def test_k1():
    g = parse_graph6("@")
    assert g.n == 1 and g.num_edges() == 0


def test_d_question_brace_against_networkx():
    g = parse_graph6("D?{")
    ref = nx.from_graph6_bytes(b"D?{")
    assert g.n == 5
    assert sorted(g.edges()) == sorted(tuple(sorted(e)) for e in ref.edges())
    assert encode_graph6(g) == "D?{"


def test_header_and_whitespace():
    assert parse_graph6(">>graph6<<D?{\n") == parse_graph6("D?{")
    assert encode_graph6(complete(3), header=True) == ">>graph6<<Bw"


@given(graphs(min_n=0, max_n=12))
def test_encoder_matches_networkx(g):
    assert encode_graph6(g) == _nx_bytes(g)


@given(graphs(min_n=1, max_n=12))
def test_roundtrip(g):
    assert parse_graph6(encode_graph6(g)) == g


def test_corpus_roundtrip():
    for n in range(1, 7):
        for g in connected_graphs(n):
            text = encode_graph6(g)
            assert encode_graph6(parse_graph6(text)) == text


def test_long_size_field():
    g = path(70)
    text = encode_graph6(g)
    assert text[0] == "~"
    assert parse_graph6(text) == g
    assert text == _nx_bytes(g)


@pytest.mark.parametrize("text,offset", [("D?{!", 3), ("Dé{", 1), ("", 0), ("D?", 2), ("D?{{", 3)])
def test_errors_name_offset(text, offset):
    with pytest.raises(ParseError) as info:
        parse_graph6(text)
    assert info.value.offset == offset
