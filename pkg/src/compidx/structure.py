"""Directed triangles, induced 4-holes, Type-1/Type-2 walks and vertex types,
score sequences, and Frobenius numbers."""

from __future__ import annotations

import enum
import heapq
from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Iterable, Sequence

from .core import Digraph, bits
from .errors import (
    NoDirectedCycleError,
    NotCoprimeError,
    NotInUError,
    NotTournamentError,
    TheoremViolation,
)
from .sinks import SinkSequence, is_acyclic


class WalkType(enum.Enum):
    TYPE1 = 1  # visits every vertex of a directed 3-cycle
    TYPE2 = 2  # visits every vertex of an induced directed 4-cycle


class VertexType(enum.Enum):
    TYPE1_ONLY = "type1"
    TYPE2_ONLY = "type2"
    BOTH = "both"


@dataclass(frozen=True)
class TriangleSet:
    triangles: tuple[tuple[int, int, int], ...]

    def __len__(self):
        return len(self.triangles)

    def __iter__(self):
        return iter(self.triangles)


@dataclass(frozen=True)
class HoleSet:
    holes: tuple[tuple[int, int, int, int], ...]

    def __len__(self):
        return len(self.holes)

    def __iter__(self):
        return iter(self.holes)


@dataclass(frozen=True)
class ScoreSequence:
    scores: tuple[int, ...]


def find_triangles(d: Digraph) -> TriangleSet:
    """All directed 3-cycles ``x -> y -> z -> x``, least vertex first."""
    succ, pred = d.succ, d.pred
    out = []
    for x in range(d.n):
        above = ~((1 << (x + 1)) - 1)
        for y in bits(succ[x] & above):
            for z in bits(succ[y] & pred[x] & above):
                out.append((x, y, z))
    return TriangleSet(tuple(out))


def find_holes4(d: Digraph) -> HoleSet:
    """All induced directed 4-cycles ``v0 -> v1 -> v2 -> v3 -> v0`` with no arc
    between ``v0, v2`` or between ``v1, v3``; least vertex first.

    In a multipartite tournament non-adjacent vertices share a part, so every
    hole found alternates between two partite sets.
    """
    succ, pred = d.succ, d.pred
    adj = [succ[v] | pred[v] for v in range(d.n)]
    out = []
    for v0 in range(d.n):
        above = ~((1 << (v0 + 1)) - 1)
        for v1 in bits(succ[v0] & above):
            for v2 in bits(succ[v1] & ~adj[v0] & above):
                for v3 in bits(succ[v2] & pred[v0] & ~adj[v1] & above):
                    out.append((v0, v1, v2, v3))
    return HoleSet(tuple(out))


def typed_cycles(d: Digraph, kind: WalkType) -> tuple[tuple[int, ...], ...]:
    return find_triangles(d).triangles if kind is WalkType.TYPE1 else find_holes4(d).holes


def _cycle_reaches(d: Digraph, cycle: Sequence[int]) -> int:
    # every vertex of a cycle reaches the others, so one representative suffices
    return d.reach[cycle[0]]


def has_typed_walk(d: Digraph, u: int, w: int, kind: WalkType, cycles=None) -> bool:
    """Whether some ``(u, w)``-walk visits every vertex of a 3-cycle (TYPE1) or
    of an induced 4-hole (TYPE2).

    Such a walk exists iff ``u`` reaches a qualifying cycle that reaches ``w``:
    enter the cycle, go around it once, leave towards ``w``.
    """
    if cycles is None:
        cycles = typed_cycles(d, kind)
    ru = d.reach[u]
    for c in cycles:
        if (ru >> c[0]) & 1 and (_cycle_reaches(d, c) >> w) & 1:
            return True
    return False


def shortest_path(d: Digraph, source: int, targets: int) -> list[int] | None:
    """Shortest directed path from ``source`` to any vertex of the bitmask
    ``targets`` (length 0 if ``source`` is a target)."""
    if (targets >> source) & 1:
        return [source]
    parent = {source: None}
    frontier = [source]
    while frontier:
        nxt = []
        for u in frontier:
            for v in bits(d.succ[u]):
                if v in parent:
                    continue
                parent[v] = u
                if (targets >> v) & 1:
                    path = [v]
                    while parent[path[-1]] is not None:
                        path.append(parent[path[-1]])
                    return path[::-1]
                nxt.append(v)
        frontier = nxt
    return None


def _go_around(cycle: Sequence[int], start: int) -> list[int]:
    i = cycle.index(start)
    return [cycle[(i + j) % len(cycle)] for j in range(1, len(cycle) + 1)]


def _cycle_mask(cycle: Iterable[int]) -> int:
    m = 0
    for v in cycle:
        m |= 1 << v
    return m


def route_through(d: Digraph, u: int, w: int, cycles: Sequence[Sequence[int]]) -> list[int] | None:
    """A ``(u, w)``-walk that goes once around each of ``cycles`` in order, or
    ``None`` if the cycles cannot be chained that way."""
    walk = [u]
    for c in cycles:
        seg = shortest_path(d, walk[-1], _cycle_mask(c))
        if seg is None:
            return None
        walk.extend(seg[1:])
        walk.extend(_go_around(c, walk[-1]))
    seg = shortest_path(d, walk[-1], 1 << w)
    if seg is None:
        return None
    walk.extend(seg[1:])
    return walk


def typed_walk_witness(d: Digraph, u: int, w: int, kind: WalkType, cycles=None) -> list[int] | None:
    """Shortest walk of the form enter-circle-exit over all qualifying cycles."""
    if cycles is None:
        cycles = typed_cycles(d, kind)
    best = None
    for c in cycles:
        walk = route_through(d, u, w, [c])
        if walk is not None and (best is None or len(walk) < len(best)):
            best = walk
    return best


def is_walk(d: Digraph, walk: Sequence[int]) -> bool:
    return all(d.has_arc(a, b) for a, b in zip(walk, walk[1:]))


def walk_contains(walk: Iterable[int], cycle: Iterable[int]) -> bool:
    return set(cycle) <= set(walk)


def vertex_type(d: Digraph, ss: SinkSequence, w: int) -> VertexType:
    """Classify ``w`` in ``W_0 ∪ ... ∪ W_{zeta-1}`` by which walk types reach
    it from every vertex of ``D_zeta``.

    Raises :class:`TheoremViolation` if some vertex of ``D_zeta`` has neither
    a Type-1 nor a Type-2 walk to ``w``.
    """
    if w not in ss.eliminated:
        raise NotInUError(f"vertex {w} is not eliminated before step {ss.zeta}")
    if is_acyclic(d):
        raise NoDirectedCycleError("digraph has no directed cycle")
    tri = typed_cycles(d, WalkType.TYPE1)
    holes = typed_cycles(d, WalkType.TYPE2)
    all1 = all2 = True
    for u in ss.core_vertices:
        t1 = has_typed_walk(d, u, w, WalkType.TYPE1, tri)
        t2 = has_typed_walk(d, u, w, WalkType.TYPE2, holes)
        if not (t1 or t2):
            raise TheoremViolation(f"vertex {u} has neither a Type-1 nor a Type-2 walk to {w}")
        all1 &= t1
        all2 &= t2
    if all1 and all2:
        return VertexType.BOTH
    if all1:
        return VertexType.TYPE1_ONLY
    if all2:
        return VertexType.TYPE2_ONLY
    raise TheoremViolation(f"vertex {w} is neither of Type 1 nor of Type 2")


def score_sequence(d: Digraph) -> ScoreSequence:
    if not d.is_tournament():
        raise NotTournamentError("score sequences are defined for tournaments")
    return ScoreSequence(tuple(sorted(d.out_degree(v) for v in range(d.n))))


def frobenius(ps: Iterable[int]) -> int:
    """Largest integer not representable as a nonnegative combination of ``ps``;
    -1 when every nonnegative integer is representable.

    Shortest paths over residues modulo the smallest element: the least
    representable number in each residue class, minus that element, bounds
    the gaps.
    """
    ps = sorted(set(ps))
    if not ps:
        raise ValueError("need at least one generator")
    if ps[0] < 1:
        raise ValueError("generators must be positive")
    if reduce(gcd, ps) != 1:
        raise NotCoprimeError(f"gcd{tuple(ps)} != 1")
    a = ps[0]
    least = [None] * a
    least[0] = 0
    heap = [(0, 0)]
    while heap:
        val, r = heapq.heappop(heap)
        if val != least[r]:
            continue
        for p in ps[1:]:
            nv = val + p
            nr = nv % a
            if least[nr] is None or nv < least[nr]:
                least[nr] = nv
                heapq.heappush(heap, (nv, nr))
    return max(least) - a


def longest_cycle_length(d: Digraph) -> int:
    """Length of a longest directed cycle (0 if acyclic), by DP over vertex
    subsets: ``ends[S]`` holds the endpoints of paths that start at ``min(S)``
    and cover exactly ``S``."""
    n = d.n
    succ = d.succ
    ends = [0] * (1 << n)
    for s in range(n):
        ends[1 << s] = 1 << s
    best = 0
    for mask in range(1, 1 << n):
        e = ends[mask]
        if not e:
            continue
        low = mask & -mask
        start = low.bit_length() - 1
        higher = ~((low << 1) - 1)
        size = mask.bit_count()
        for v in bits(e):
            if size > best and size >= 2 and (succ[v] >> start) & 1:
                best = size
            for x in bits(succ[v] & ~mask & higher):
                ends[mask | (1 << x)] |= 1 << x
    return best
