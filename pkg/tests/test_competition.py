import pytest

from compidx.competition import (
    competition_graph,
    competition_profile,
    graph_hash,
    graph_sequence,
    m_step_competition_graph,
)
from compidx.core import SimpleGraph, build_digraph, primitivity
from compidx.generators import gen_mixed_cycle_digraph, gen_transitive_tournament

from oracles import competition_edges_by_walks

TRIANGLE = [(0, 1), (1, 2), (2, 0)]
# sink 0, triangle 1 -> 2 -> 3 -> 1, everything beats 0
SCORES_0222 = [(1, 2), (2, 3), (3, 1), (1, 0), (2, 0), (3, 0)]
# parts {a, c} and {b, d, s}: a=0, b=1, c=2, d=3, s=4
BIPARTITE = [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (2, 4)]


def test_competition_graph_examples():
    assert competition_graph(build_digraph(3, TRIANGLE)).is_empty()
    assert competition_graph(build_digraph(3, [(0, 2), (1, 2)])).edges == ((0, 1),)
    d = build_digraph(4, SCORES_0222)
    assert set(competition_graph(d).edges) == competition_edges_by_walks(4, SCORES_0222, 1)


def test_square_of_0222_is_k3_plus_isolated():
    g = m_step_competition_graph(build_digraph(4, SCORES_0222), 2)
    assert g == SimpleGraph.complete(4, [1, 2, 3])


def test_transitive_becomes_empty():
    for n in range(2, 7):
        d = gen_transitive_tournament(n)
        for m in range(n, n + 3):
            assert m_step_competition_graph(d, m).is_empty()


def test_triangle_sequence_is_empty():
    assert all(g.is_empty() for g in graph_sequence(build_digraph(3, TRIANGLE), 3))


def test_transitive_edge_counts():
    seq = graph_sequence(gen_transitive_tournament(4), 4)
    assert [len(g.edges) for g in seq] == [3, 1, 0, 0]


def test_primitive_sequence_ends_complete():
    d = gen_mixed_cycle_digraph(5, 2)
    exp = primitivity(d).exponent
    assert graph_sequence(d, exp)[-1].is_complete()


def test_profile_transitive_and_triangle():
    p = competition_profile(gen_transitive_tournament(5))
    assert (p.cindex, p.cperiod_literal) == (4, 1)
    p = competition_profile(build_digraph(3, TRIANGLE))
    assert (p.cindex, p.cperiod_literal) == (1, 1)
    assert p.matrix_period == 3 and p.eventual_graph_period == 1


def test_profile_bipartite_example():
    d = build_digraph(5, BIPARTITE, partition=[0, 1, 0, 1, 1])
    p = competition_profile(d)
    # walk oracle over a long horizon gives the graph sequence independently
    seq = [frozenset(competition_edges_by_walks(5, BIPARTITE, m)) for m in range(1, 25)]
    q, per = p.cindex, p.cperiod_literal
    assert per in (1, 2)
    assert all(seq[m - 1] == seq[m - 1 + per] for m in range(q, 20))
    assert q == 1 or seq[q - 2] != seq[q - 2 + per]
    assert all(seq[m - 1] != seq[m - 1 + s] for m in [q] for s in range(1, per))


def test_profile_invariants():
    d = build_digraph(5, BIPARTITE, partition=[0, 1, 0, 1, 1])
    p = competition_profile(d)
    assert p.cindex <= p.matrix_index
    assert p.cperiod_literal <= p.eventual_graph_period
    assert p.matrix_period % p.eventual_graph_period == 0
    for m in range(1, 30):
        assert p.graph(m) == m_step_competition_graph(d, m)
    with pytest.raises(ValueError):
        p.graph(0)
    assert len(p.sequence_hashes) == p.matrix_index + p.matrix_period
    assert set(p.to_json()) == {"cindex", "cperiod", "eventual_period", "matrix_index", "matrix_period"}


def test_graph_hash_distinguishes():
    assert graph_hash(SimpleGraph.complete(3)) != graph_hash(SimpleGraph.empty(3))
    assert graph_hash(SimpleGraph.empty(3)) != graph_hash(SimpleGraph.empty(4))
