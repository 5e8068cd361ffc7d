import pytest

from compidx.core import build_digraph
from compidx.errors import NoDirectedCycleError, NotCoprimeError, NotInUError, NotTournamentError
from compidx.generators import enumerate_orientations, gen_sink_cycle_kpartite, gen_transitive_tournament
from compidx.sinks import sink_sequence
from compidx.structure import (
    VertexType,
    WalkType,
    find_holes4,
    find_triangles,
    frobenius,
    has_typed_walk,
    is_walk,
    longest_cycle_length,
    score_sequence,
    typed_walk_witness,
    vertex_type,
    walk_contains,
)

from oracles import frobenius_brute, holes_brute, simple_cycle_lengths, triangles_brute

TRIANGLE = [(0, 1), (1, 2), (2, 0)]
STRONG4 = [(0, 1), (1, 2), (2, 0), (0, 3), (3, 1), (2, 3)]
BIPARTITE = [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (2, 4)]
# triangle a=0 -> b=1 -> c=2 -> a plus sink w=3 in c's part, fed by a and b
TRI_SINK = TRIANGLE + [(0, 3), (1, 3)]


def test_triangles():
    assert find_triangles(build_digraph(3, TRIANGLE)).triangles == ((0, 1, 2),)
    assert len(find_triangles(gen_transitive_tournament(5))) == 0
    got = {frozenset(t) for t in find_triangles(build_digraph(4, STRONG4))}
    assert got == triangles_brute(4, STRONG4)


def test_holes():
    d = build_digraph(4, [(0, 1), (1, 2), (2, 3), (3, 0)], partition=[0, 1, 0, 1])
    assert find_holes4(d).holes == ((0, 1, 2, 3),)
    assert len(find_holes4(build_digraph(3, TRIANGLE))) == 0
    assert find_holes4(build_digraph(5, BIPARTITE)).holes == ((0, 1, 2, 3),)


def test_triangles_and_holes_match_brute_force():
    for d in enumerate_orientations([2, 1, 2]):
        arcs = d.arcs
        assert {frozenset(t) for t in find_triangles(d)} == triangles_brute(d.n, arcs)
        assert {frozenset(h) for h in find_holes4(d)} == holes_brute(d.n, arcs)


def test_typed_walks():
    d = build_digraph(4, TRI_SINK, partition=[0, 1, 2, 2])
    assert has_typed_walk(d, 0, 3, WalkType.TYPE1)
    assert not has_typed_walk(gen_transitive_tournament(4), 3, 0, WalkType.TYPE1)
    b = build_digraph(5, BIPARTITE)
    assert has_typed_walk(b, 1, 4, WalkType.TYPE2)
    w = typed_walk_witness(b, 1, 4, WalkType.TYPE2)
    assert w[0] == 1 and w[-1] == 4 and is_walk(b, w) and walk_contains(w, (0, 1, 2, 3))


def test_vertex_types():
    d = build_digraph(4, TRI_SINK, partition=[0, 1, 2, 2])
    ss = sink_sequence(d)
    assert vertex_type(d, ss, 3) is VertexType.TYPE1_ONLY
    b = build_digraph(5, BIPARTITE, partition=[0, 1, 0, 1, 1])
    assert vertex_type(b, sink_sequence(b), 4) is VertexType.TYPE2_ONLY
    with pytest.raises(NotInUError):
        vertex_type(b, sink_sequence(b), 0)
    t = gen_transitive_tournament(4)
    with pytest.raises(NoDirectedCycleError):
        vertex_type(t, sink_sequence(t), 0)


def test_vertex_type_both():
    # search seeded 3-partite instances with both a triangle and a hole
    for seed in range(200):
        d = gen_sink_cycle_kpartite([2, 2, 2], seed)
        ss = sink_sequence(d)
        if find_triangles(d).triangles and find_holes4(d).holes:
            types = {vertex_type(d, ss, w) for w in ss.eliminated}
            if VertexType.BOTH in types:
                return
    pytest.fail("no 'both' vertex found in 200 seeded 3-partite instances")


def test_score_sequence():
    assert score_sequence(gen_transitive_tournament(4)).scores == (0, 1, 2, 3)
    assert score_sequence(build_digraph(3, TRIANGLE)).scores == (1, 1, 1)
    sinkt = [(1, 2), (2, 3), (3, 1), (1, 0), (2, 0), (3, 0)]
    assert score_sequence(build_digraph(4, sinkt)).scores == (0, 2, 2, 2)
    with pytest.raises(NotTournamentError):
        score_sequence(build_digraph(5, BIPARTITE))


@pytest.mark.parametrize("ps,expected", [((3, 4), 5), ((2, 3), 1), ((3, 4, 5), 2), ((1, 5), -1)])
def test_frobenius_values(ps, expected):
    assert frobenius(ps) == expected == frobenius_brute(ps)


def test_frobenius_not_coprime():
    with pytest.raises(NotCoprimeError):
        frobenius([4, 6])


def test_longest_cycle_matches_brute_force():
    for d in enumerate_orientations([1, 1, 1, 1, 1]):
        lengths = simple_cycle_lengths(d.n, d.arcs)
        assert longest_cycle_length(d) == max(lengths, default=0)
