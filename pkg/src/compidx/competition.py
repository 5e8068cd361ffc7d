"""m-step competition graphs and the competition index/period of a digraph.

``C^m(D)`` is the row graph of ``A^m``.  Since the powers of a Boolean matrix
are eventually periodic, so is the graph sequence; :func:`competition_profile`
finds the first repeated matrix power and reads both the index and the period
of the graph sequence off that finite window.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field

from .core import BooleanMatrix, Digraph, SimpleGraph, bool_multiply, bool_power, row_graph

__all__ = [
    "CompetitionProfile",
    "competition_graph",
    "competition_profile",
    "graph_hash",
    "graph_sequence",
    "m_step_competition_graph",
]


def competition_graph(d: Digraph) -> SimpleGraph:
    return row_graph(d.adjacency())


def m_step_competition_graph(d: Digraph, m: int) -> SimpleGraph:
    if m < 1:
        raise ValueError("m must be a positive integer")
    return row_graph(bool_power(d.adjacency(), m))


def graph_sequence(d: Digraph, m_max: int) -> list[SimpleGraph]:
    """``[C^1(D), ..., C^m_max(D)]``."""
    if m_max < 1:
        raise ValueError("m_max must be a positive integer")
    a = d.adjacency()
    p = a
    out = [row_graph(p)]
    for _ in range(m_max - 1):
        p = bool_multiply(p, a)
        out.append(row_graph(p))
    return out


def graph_hash(g: SimpleGraph) -> str:
    """128-bit hex digest of the canonical edge list."""
    h = hashlib.blake2b(digest_size=16)
    h.update(g.n.to_bytes(4, "little"))
    for u, v in g.edges:
        h.update(u.to_bytes(4, "little"))
        h.update(v.to_bytes(4, "little"))
    return h.hexdigest()


@dataclass(frozen=True)
class CompetitionProfile:
    matrix_index: int
    matrix_period: int
    cindex: int
    cperiod_literal: int
    eventual_graph_period: int
    # R(A^1) .. R(A^(matrix_index + matrix_period - 1)); later powers repeat
    graphs: tuple[SimpleGraph, ...] = field(repr=False)

    @property
    def cperiod(self) -> int:
        return self.cperiod_literal

    @property
    def sequence_hashes(self) -> list[str]:
        """Hashes of ``R(A^1) .. R(A^(matrix_index + matrix_period))``."""
        return [graph_hash(self.graph(t)) for t in range(1, self.matrix_index + self.matrix_period + 1)]

    def graph(self, m: int) -> SimpleGraph:
        """``C^m(D)`` for any ``m >= 1``, folded into the stored window."""
        if m < 1:
            raise ValueError("m must be a positive integer")
        i, p = self.matrix_index, self.matrix_period
        if m >= i:
            m = i + (m - i) % p
        return self.graphs[m - 1]

    @property
    def window_end(self) -> int:
        """Last power stored explicitly; every ``C^m`` equals one of ``C^1..C^window_end``."""
        return self.matrix_index + self.matrix_period - 1

    def to_json(self) -> dict:
        return {
            "cindex": self.cindex,
            "cperiod": self.cperiod_literal,
            "eventual_period": self.eventual_graph_period,
            "matrix_index": self.matrix_index,
            "matrix_period": self.matrix_period,
        }


def _divisors(p: int) -> list[int]:
    return [d for d in range(1, p + 1) if p % d == 0]


def matrix_powers_until_repeat(a: BooleanMatrix) -> tuple[list[BooleanMatrix], int, int]:
    """Powers ``A^1, A^2, ...`` up to the first repeat.

    Returns ``(powers, i, p)`` where ``A^i = A^(i+p)`` is the first
    coincidence and ``powers`` holds ``A^1 .. A^(i+p-1)``.
    """
    seen: dict[tuple[int, ...], int] = {}
    powers = []
    p = a
    t = 1
    while p.rows not in seen:
        seen[p.rows] = t
        powers.append(p)
        p = bool_multiply(p, a)
        t += 1
    i = seen[p.rows]
    return powers, i, t - i


def competition_profile(d: Digraph) -> CompetitionProfile:
    powers, mi, mp = matrix_powers_until_repeat(d.adjacency())
    graphs = tuple(row_graph(p) for p in powers)
    keys = [g.edges for g in graphs]

    def key(t: int):
        if t >= mi:
            t = mi + (t - mi) % mp
        return keys[t - 1]

    eventual = next(
        p for p in _divisors(mp) if all(key(t) == key(t + p) for t in range(mi, mi + mp))
    )
    q = mi
    while q > 1 and key(q - 1) == key(q - 1 + eventual):
        q -= 1
    literal = next(p for p in range(1, eventual + 1) if key(q) == key(q + p))
    return CompetitionProfile(mi, mp, q, literal, eventual, graphs)
