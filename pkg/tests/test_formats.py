import pytest

from compidx.core import SimpleGraph
from compidx.errors import FormatError
from compidx.formats import (
    digraph_to_dot,
    format_digraph,
    graph_to_dot,
    parse_digraph,
    parse_digraph_dot,
    parse_graph_dot,
    read_digraph,
    write_digraph,
)
from compidx.generators import gen_random_kpartite, gen_zeta_tournament


def test_text_round_trip(tmp_path):
    for seed in range(20):
        d = gen_random_kpartite([2, 3, 1], seed)
        assert parse_digraph(format_digraph(d)) == d
        write_digraph(d, tmp_path / "d.txt")
        assert read_digraph(tmp_path / "d.txt") == d


def test_comments_and_errors():
    d = parse_digraph("# a comment\ndigraph 2\n1 0  # arc\n")
    assert d.arcs == [(1, 0)]
    for bad in ["", "0 1\n", "digraph 2\n0 1 2\n", "digraph x\n", "digraph 2\ndigraph 2\n"]:
        with pytest.raises(FormatError):
            parse_digraph(bad)


def test_dot_round_trip():
    d = gen_zeta_tournament(6, 3)
    assert parse_digraph_dot(digraph_to_dot(d)).succ == d.succ
    g = SimpleGraph.from_edges(5, [(0, 3), (1, 2)])
    assert parse_graph_dot(graph_to_dot(g)) == g
