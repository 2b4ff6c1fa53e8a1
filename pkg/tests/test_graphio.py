import pytest
from hypothesis import given, settings, strategies as st

from beibounds.errors import ParseError
from beibounds.generators import all_labeled, complete, gnp, net, path
from beibounds.graphio import decode_graph6, encode_graph6, format_edge_list, parse_edge_list
from beibounds.graphs import Graph

nx = pytest.importorskip("networkx")


def test_k2_encodes_to_known_string():
    assert encode_graph6(complete(2)) == "A_"


def test_single_vertex_encodes_header_only():
    assert encode_graph6(Graph.from_edge_list(1, [])) == "@"


def test_net_round_trip():
    assert decode_graph6(encode_graph6(net())) == net()


def test_round_trip_exhaustive_small():
    for n in range(1, 6):
        for g in all_labeled(n):
            assert decode_graph6(encode_graph6(g)) == g


def test_long_form_round_trip():
    g = gnp(100, 1, 4, 9)
    s = encode_graph6(g)
    assert s.startswith("~")
    assert decode_graph6(s) == g


@given(st.integers(1, 40), st.integers(0, 2 ** 40 - 1))
@settings(max_examples=150, deadline=None)
def test_round_trip_random_graphs(n, seed):
    g = gnp(n, 1, 2, seed)
    assert decode_graph6(encode_graph6(g)) == g


def _nx_graph6(g):
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return nx.to_graph6_bytes(G, header=False).decode().strip()


def test_matches_networkx_encoding():
    for g in [net(), path(7), complete(6), gnp(30, 1, 3, 4), gnp(70, 1, 5, 8)]:
        assert encode_graph6(g) == _nx_graph6(g)


def test_decode_rejects_truncated_body():
    with pytest.raises(ParseError):
        decode_graph6("D")  # n=5 needs 2 body bytes


def test_decode_rejects_bad_byte():
    with pytest.raises(ParseError) as err:
        decode_graph6("B" + chr(30))
    assert err.value.offset is not None


def test_parse_edge_list_p3():
    assert parse_edge_list("3\n0 1\n1 2\n") == path(3)


def test_parse_edge_list_collapses_duplicates():
    assert parse_edge_list("2\n0 1\n1 0\n") == complete(2)


def test_parse_edge_list_comments_and_blanks():
    text = "# a path\n3\n\n0 1  # first\n1 2\n"
    assert parse_edge_list(text) == path(3)


def test_parse_edge_list_out_of_range_is_error_with_line():
    with pytest.raises(ParseError) as err:
        parse_edge_list("3\n0 3\n")
    assert err.value.line == 2


def test_parse_edge_list_self_loop_is_error():
    with pytest.raises(ParseError):
        parse_edge_list("3\n1 1\n")


def test_format_edge_list_round_trip():
    g = net()
    assert parse_edge_list(format_edge_list(g)) == g
