"""Sink sequences and lengths of walks leaving a vertex."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .core import Digraph, bits, strongly_connected_components


class TerminalKind(enum.Enum):
    ALL_SINKS = "all_sinks"
    EMPTY = "empty"


@dataclass(frozen=True)
class SinkSequence:
    """Layers ``W_0..W_zeta`` obtained by repeatedly deleting all sinks.

    ``residual_vertices[i]`` is the vertex set of the i-th digraph of the
    associated digraph sequence (``D_0 = D``).
    """

    zeta: int
    layers: tuple[tuple[int, ...], ...]
    residual_vertices: tuple[tuple[int, ...], ...]
    terminal_kind: TerminalKind

    def layer_of(self, v: int) -> int | None:
        for i, layer in enumerate(self.layers):
            if v in layer:
                return i
        return None

    @property
    def eliminated(self) -> tuple[int, ...]:
        """Vertices of ``W_0 ∪ ... ∪ W_{zeta-1}``."""
        return tuple(sorted(v for layer in self.layers[: self.zeta] for v in layer))

    @property
    def core_vertices(self) -> tuple[int, ...]:
        """Vertex set of the last digraph ``D_zeta``."""
        return self.residual_vertices[self.zeta]

    def to_json(self) -> dict:
        return {
            "zeta": self.zeta,
            "layers": [list(layer) for layer in self.layers],
            "terminal": self.terminal_kind.value,
        }


def sink_sequence(d: Digraph) -> SinkSequence:
    succ = d.succ
    residual = d.full_mask
    layers = []
    residuals = []
    while True:
        residuals.append(tuple(bits(residual)))
        w = 0
        for v in bits(residual):
            if not succ[v] & residual:
                w |= 1 << v
        layers.append(tuple(bits(w)))
        if w == residual or w == 0:
            kind = TerminalKind.ALL_SINKS if w == residual else TerminalKind.EMPTY
            return SinkSequence(len(layers) - 1, tuple(layers), tuple(residuals), kind)
        residual &= ~w


def is_acyclic(d: Digraph) -> bool:
    """True iff ``d`` has no directed cycle (every strong component is a single
    loop-free vertex)."""
    return all(len(c) == 1 for c in strongly_connected_components(d))


class _Unbounded:
    __slots__ = ()

    def __repr__(self):
        return "UNBOUNDED"


UNBOUNDED = _Unbounded()


def cyclic_vertices(d: Digraph) -> int:
    """Bitmask of vertices lying on some directed cycle."""
    m = 0
    for comp in strongly_connected_components(d):
        if len(comp) > 1:
            for v in comp:
                m |= 1 << v
    return m


def walk_length_spectrum(d: Digraph, v: int, cap: int | None = None):
    """Lengths of the directed walks starting at ``v``.

    Returns :data:`UNBOUNDED` when ``v`` reaches a directed cycle, otherwise a
    frozenset containing 0 (the empty walk) and every other realised length.
    """
    if cap is not None and cap < d.n:
        raise ValueError("cap must be at least n")
    on_cycle = cyclic_vertices(d)
    if d.reach[v] & on_cycle:
        return UNBOUNDED
    # lengths[u] as a bitmask over 0..n-1, filled in reverse topological order
    memo: dict[int, int] = {}
    stack = [(v, False)]
    while stack:
        u, done = stack.pop()
        if u in memo:
            continue
        if done:
            acc = 1
            for w in bits(d.succ[u]):
                acc |= memo[w] << 1
            memo[u] = acc
        else:
            stack.append((u, True))
            stack.extend((w, False) for w in bits(d.succ[u]) if w not in memo)
    lengths = frozenset(bits(memo[v]))
    assert cap is None or max(lengths) <= cap
    return lengths
