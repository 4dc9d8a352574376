import pytest

from eopack.graph import Graph, GraphError, iter_graph6, parse_graph6, write_graph6


def test_hand_decoded_example():
    # 'D' -> n=5; '?' -> 000000 for pairs (0,1)(0,2)(1,2)(0,3)(1,3)(2,3);
    # '{' -> 111100 for pairs (0,4)(1,4)(2,4)(3,4) plus two zero pad bits.
    g = parse_graph6("D?{")
    assert g.n == 5
    assert g.edges == ((0, 4), (1, 4), (2, 4), (3, 4))


def test_single_vertex():
    g = parse_graph6("@")
    assert g.n == 1 and g.m == 0


def test_zero_vertices():
    assert write_graph6(Graph(0, [])) == "?"
    g = parse_graph6("?")
    assert g.n == 0 and g.m == 0


def test_hand_encoded_p3_and_k3():
    p3 = Graph.from_edges(3, [(0, 1), (1, 2)])
    assert write_graph6(p3) == "Bg"  # bits 101 -> 40 -> 'g'
    k3 = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    assert write_graph6(k3) == "Bw"  # bits 111 -> 56 -> 'w'


def test_header_tolerated():
    assert parse_graph6(">>graph6<<Bw").m == 3


def test_round_trip_parse_write():
    for s in ["?", "@", "A_", "Bw", "D?{", "DQc", "G?zTb_"]:
        assert write_graph6(parse_graph6(s)) == s


def test_round_trip_write_parse():
    g = Graph.from_edges(6, [(0, 1), (0, 5), (2, 4), (3, 4), (1, 2)])
    assert parse_graph6(write_graph6(g)) == g


def test_large_order_length_field():
    g = Graph.from_edges(63, [(0, 62)])
    s = write_graph6(g)
    assert s.startswith("~")
    assert parse_graph6(s) == g


def test_out_of_range_character():
    with pytest.raises(GraphError, match="byte 1"):
        parse_graph6("B" + chr(20))


def test_trailing_bytes():
    with pytest.raises(GraphError, match="trailing bytes at byte 2"):
        parse_graph6("Bww")


def test_truncated_edge_data():
    with pytest.raises(GraphError, match="truncated"):
        parse_graph6("D?")


def test_truncated_length_field():
    with pytest.raises(GraphError, match="truncated length field"):
        parse_graph6("~B")


def test_nonzero_padding_rejected():
    # K_1,4 body byte with a padding bit forced on: '{' -> '}'
    with pytest.raises(GraphError, match="padding"):
        parse_graph6("D?}")


def test_multi_graph_file():
    gs = list(iter_graph6("Bw\n\nD?{\n"))
    assert [g.n for g in gs] == [3, 5]
