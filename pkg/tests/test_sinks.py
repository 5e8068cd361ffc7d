from compidx.core import build_digraph
from compidx.generators import gen_acyclic_kpartite, gen_transitive_tournament, gen_zeta_tournament
from compidx.sinks import (
    UNBOUNDED,
    TerminalKind,
    is_acyclic,
    sink_sequence,
    walk_length_spectrum,
)

TRIANGLE = [(0, 1), (1, 2), (2, 0)]


def test_transitive_sink_sequence():
    ss = sink_sequence(gen_transitive_tournament(4))
    assert ss.zeta == 3
    assert [list(w) for w in ss.layers] == [[0], [1], [2], [3]]
    assert ss.terminal_kind is TerminalKind.ALL_SINKS


def test_triangle_has_no_sinks():
    ss = sink_sequence(build_digraph(3, TRIANGLE))
    assert ss.zeta == 0
    assert list(ss.layers[0]) == []
    assert ss.terminal_kind is TerminalKind.EMPTY


def test_zeta_tournament_layers():
    ss = sink_sequence(gen_zeta_tournament(5, 2))
    assert ss.zeta == 2
    assert list(ss.layers[0]) == [0] and list(ss.layers[1]) == [1]
    assert ss.terminal_kind is TerminalKind.EMPTY
    assert ss.eliminated == (0, 1)
    assert ss.core_vertices == (2, 3, 4)


def test_is_acyclic_examples():
    assert is_acyclic(gen_transitive_tournament(5))
    assert not is_acyclic(build_digraph(3, TRIANGLE))
    assert not is_acyclic(build_digraph(4, TRIANGLE + [(0, 3), (1, 3), (2, 3)]))


def test_spectrum_on_layers():
    d = gen_acyclic_kpartite([2, 1, 2, 1], [0, 1, 0, 2])
    ss = sink_sequence(d)
    for i, layer in enumerate(ss.layers):
        for v in layer:
            assert walk_length_spectrum(d, v) == frozenset(range(i + 1))


def test_spectrum_unbounded_and_sink():
    d = build_digraph(4, TRIANGLE + [(0, 3)])
    assert walk_length_spectrum(d, 1) is UNBOUNDED
    assert walk_length_spectrum(d, 3) == frozenset({0})


def test_prop21_equivalence_small():
    from compidx.generators import enumerate_orientations

    for d in enumerate_orientations([1, 1, 1, 1]):
        ss = sink_sequence(d)
        covered = sum(len(w) for w in ss.layers) == d.n
        assert (ss.terminal_kind is TerminalKind.ALL_SINKS) == is_acyclic(d) == covered
