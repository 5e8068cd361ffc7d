"""Digraphs, Boolean matrices over the {0,1} semiring, and row graphs.

Rows of a :class:`BooleanMatrix` and out-neighbourhoods of a :class:`Digraph`
are stored as Python ints used as bitsets: bit ``j`` of ``rows[i]`` is entry
``(i, j)``.  Everything here is immutable.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import gcd
from typing import Iterable, Iterator, Sequence

from .errors import (
    DigonArcError,
    DimensionMismatchError,
    ExponentOverflowError,
    IntraPartArcError,
    LoopArcError,
    MissingCrossArcError,
    NotMultipartiteError,
)

__all__ = [
    "BooleanMatrix",
    "Digraph",
    "PrimitivityReport",
    "SimpleGraph",
    "bits",
    "bool_multiply",
    "bool_power",
    "build_digraph",
    "cycle_gcd",
    "infer_partition",
    "primitivity",
    "row_graph",
    "strongly_connected_components",
]


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class BooleanMatrix:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != self.n:
            raise DimensionMismatchError(f"expected {self.n} rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        if any(r & ~full for r in self.rows):
            raise DimensionMismatchError("row has bits outside the column range")

    @classmethod
    def identity(cls, n: int) -> BooleanMatrix:
        return cls(n, tuple(1 << i for i in range(n)))

    @classmethod
    def ones(cls, n: int) -> BooleanMatrix:
        full = (1 << n) - 1
        return cls(n, (full,) * n)

    @classmethod
    def zeros(cls, n: int) -> BooleanMatrix:
        return cls(n, (0,) * n)

    @classmethod
    def from_lists(cls, entries: Sequence[Sequence[int]]) -> BooleanMatrix:
        n = len(entries)
        rows = []
        for row in entries:
            if len(row) != n:
                raise DimensionMismatchError("matrix must be square")
            rows.append(_mask(j for j, x in enumerate(row) if x))
        return cls(n, tuple(rows))

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.n)] for r in self.rows]

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return (self.rows[i] >> j) & 1

    def __matmul__(self, other: BooleanMatrix) -> BooleanMatrix:
        return bool_multiply(self, other)

    def is_all_ones(self) -> bool:
        full = (1 << self.n) - 1
        return all(r == full for r in self.rows)

    def is_zero(self) -> bool:
        return not any(self.rows)


def bool_multiply(a: BooleanMatrix, b: BooleanMatrix) -> BooleanMatrix:
    """Semiring product: row ``i`` of the result is the OR of rows of ``b``
    selected by the set bits of row ``i`` of ``a``."""
    if a.n != b.n:
        raise DimensionMismatchError(f"{a.n}x{a.n} times {b.n}x{b.n}")
    brows = b.rows
    out = []
    for r in a.rows:
        acc = 0
        while r:
            low = r & -r
            acc |= brows[low.bit_length() - 1]
            r ^= low
        out.append(acc)
    return BooleanMatrix(a.n, tuple(out))


def bool_power(a: BooleanMatrix, m: int) -> BooleanMatrix:
    """``a`` to the ``m``-th power (``m >= 1``) by repeated squaring."""
    if m < 1:
        raise ValueError("power must be a positive integer")
    result = None
    base = a
    while m:
        if m & 1:
            result = base if result is None else bool_multiply(result, base)
        m >>= 1
        if m:
            base = bool_multiply(base, base)
    return result


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected simple graph on the vertex set ``0..n-1``.

    ``edges`` is kept as a sorted tuple of ``(u, v)`` pairs with ``u < v`` so
    that equality of two graphs is equality of their canonical edge lists.
    """

    n: int
    edges: tuple[tuple[int, int], ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> SimpleGraph:
        canon = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {(u, v)} out of range")
            canon.add((u, v) if u < v else (v, u))
        return cls(n, tuple(sorted(canon)))

    @classmethod
    def complete(cls, n: int, vertices: Iterable[int] | None = None) -> SimpleGraph:
        """Complete graph on ``vertices`` (default: all), other vertices isolated."""
        vs = sorted(range(n) if vertices is None else set(vertices))
        return cls(n, tuple((u, v) for i, u in enumerate(vs) for v in vs[i + 1 :]))

    @classmethod
    def empty(cls, n: int) -> SimpleGraph:
        return cls(n, ())

    @cached_property
    def neighbours(self) -> tuple[int, ...]:
        nb = [0] * self.n
        for u, v in self.edges:
            nb[u] |= 1 << v
            nb[v] |= 1 << u
        return tuple(nb)

    def degree(self, v: int) -> int:
        return self.neighbours[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.neighbours[u] >> v) & 1)

    def is_empty(self) -> bool:
        return not self.edges

    def is_complete(self) -> bool:
        return len(self.edges) == self.n * (self.n - 1) // 2

    def complement(self) -> SimpleGraph:
        present = set(self.edges)
        return SimpleGraph(
            self.n,
            tuple((u, v) for u in range(self.n) for v in range(u + 1, self.n) if (u, v) not in present),
        )

    def non_isolated(self) -> list[int]:
        return [v for v in range(self.n) if self.neighbours[v]]


def row_graph(a: BooleanMatrix) -> SimpleGraph:
    """Graph on the rows of ``a``; rows ``i`` and ``j`` are adjacent when they
    share a 1 in some column."""
    rows = a.rows
    edges = []
    for i in range(a.n):
        ri = rows[i]
        if not ri:
            continue
        for j in range(i + 1, a.n):
            if ri & rows[j]:
                edges.append((i, j))
    return SimpleGraph(a.n, tuple(edges))


@dataclass(frozen=True)
class Digraph:
    """Loop-free, digon-free digraph on vertices ``0..n-1``.

    ``succ[v]`` is the out-neighbourhood of ``v`` as a bitmask.  When
    ``partition`` is set the digraph has been validated as a multipartite
    tournament with those parts.  Build instances through :func:`build_digraph`
    (or :meth:`from_arcs`) to get validation.
    """

    n: int
    succ: tuple[int, ...]
    partition: tuple[int, ...] | None = None

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int]], partition=None) -> Digraph:
        return build_digraph(n, arcs, partition)

    @cached_property
    def pred(self) -> tuple[int, ...]:
        p = [0] * self.n
        for u, s in enumerate(self.succ):
            for v in bits(s):
                p[v] |= 1 << u
        return tuple(p)

    @property
    def arcs(self) -> list[tuple[int, int]]:
        """Arcs in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in bits(self.succ[u])]

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_arc(self, u: int, v: int) -> bool:
        return bool((self.succ[u] >> v) & 1)

    def adjacent(self, u: int, v: int) -> bool:
        return self.has_arc(u, v) or self.has_arc(v, u)

    def out_degree(self, v: int) -> int:
        return self.succ[v].bit_count()

    def sinks(self) -> list[int]:
        return [v for v in range(self.n) if not self.succ[v]]

    def adjacency(self) -> BooleanMatrix:
        return BooleanMatrix(self.n, self.succ)

    @property
    def k(self) -> int | None:
        """Number of partite sets, or ``None`` without a partition."""
        return None if self.partition is None else len(set(self.partition))

    def is_tournament(self) -> bool:
        return all(
            self.adjacent(u, v) for u in range(self.n) for v in range(u + 1, self.n)
        )

    def part_members(self) -> list[int]:
        """Bitmask of each partite set, indexed by part id."""
        if self.partition is None:
            raise ValueError("digraph has no partition")
        masks = [0] * self.k
        for v, p in enumerate(self.partition):
            masks[p] |= 1 << v
        return masks

    @cached_property
    def reach(self) -> tuple[int, ...]:
        """Reflexive-transitive closure: ``reach[v]`` holds every vertex reachable
        from ``v`` by a walk of length >= 0."""
        succ = self.succ
        out = []
        for v in range(self.n):
            seen = 1 << v
            frontier = succ[v] & ~seen
            while frontier:
                seen |= frontier
                nxt = 0
                for u in bits(frontier):
                    nxt |= succ[u]
                frontier = nxt & ~seen
            out.append(seen)
        return tuple(out)

    def induced(self, vertices: Iterable[int]) -> Digraph:
        """Subdigraph induced by ``vertices``, relabelled in ascending order."""
        vs = sorted(set(vertices))
        index = {v: i for i, v in enumerate(vs)}
        succ = tuple(_mask(index[w] for w in bits(self.succ[v]) if w in index) for v in vs)
        return Digraph(len(vs), succ)


def infer_partition(n: int, succ: Sequence[int]) -> tuple[int, ...]:
    """Parts of a multipartite tournament recovered from non-adjacency.

    Two vertices share a part iff they are joined by a chain of non-adjacent
    pairs.  Raises :class:`NotMultipartiteError` when the result is not a
    valid partition (an arc inside a part or a missing arc across parts).
    """
    adj = [succ[v] for v in range(n)]
    for u in range(n):
        for v in bits(succ[u]):
            adj[v] |= 1 << u
    full = (1 << n) - 1
    part = [-1] * n
    k = 0
    for start in range(n):
        if part[start] >= 0:
            continue
        comp = 1 << start
        frontier = comp
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= full & ~adj[v] & ~(1 << v)
            frontier = nxt & ~comp
            comp |= frontier
        for v in bits(comp):
            part[v] = k
        k += 1
    for u in range(n):
        for v in range(u + 1, n):
            linked = bool((adj[u] >> v) & 1)
            if part[u] == part[v] and linked:
                raise NotMultipartiteError(f"arc between {u} and {v} inside inferred part {part[u]}")
            if part[u] != part[v] and not linked:
                raise NotMultipartiteError(f"no arc between {u} and {v} in different parts")
    return tuple(part)


def _check_partition(n: int, succ: Sequence[int], partition: Sequence[int]) -> tuple[int, ...]:
    if len(partition) != n:
        raise ValueError(f"partition has {len(partition)} entries for {n} vertices")
    ids = sorted(set(partition))
    if ids != list(range(len(ids))):
        raise ValueError(f"part ids must be contiguous from 0, got {ids}")
    for u in range(n):
        for v in range(u + 1, n):
            linked = bool((succ[u] >> v) & 1) or bool((succ[v] >> u) & 1)
            if partition[u] == partition[v]:
                if linked:
                    raise IntraPartArcError(f"arc between {u} and {v} inside part {partition[u]}")
            elif not linked:
                raise MissingCrossArcError(f"no arc between {u} (part {partition[u]}) and {v} (part {partition[v]})")
    return tuple(partition)


def build_digraph(
    n: int,
    arcs: Iterable[tuple[int, int]],
    partition: Sequence[int] | None = None,
    require_multipartite: bool = False,
) -> Digraph:
    """Validate and build a :class:`Digraph`.

    A given ``partition`` is checked for completeness across parts; with
    ``require_multipartite`` and no partition the parts are inferred.
    """
    if n < 1:
        raise ValueError("a digraph needs at least one vertex")
    succ = [0] * n
    for u, v in arcs:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"arc {(u, v)} out of range for n={n}")
        if u == v:
            raise LoopArcError(f"loop at vertex {u}")
        if (succ[v] >> u) & 1:
            raise DigonArcError(f"both ({u}, {v}) and ({v}, {u}) present")
        succ[u] |= 1 << v
    if partition is not None:
        part = _check_partition(n, succ, partition)
    elif require_multipartite:
        part = infer_partition(n, succ)
    else:
        part = None
    return Digraph(n, tuple(succ), part)


def strongly_connected_components(d: Digraph) -> list[list[int]]:
    """Strong components, each sorted, ordered by minimum vertex."""
    reach = d.reach
    assigned = 0
    comps = []
    for v in range(d.n):
        if (assigned >> v) & 1:
            continue
        comp = [u for u in bits(reach[v]) if (reach[u] >> v) & 1]
        for u in comp:
            assigned |= 1 << u
        comps.append(comp)
    return comps


def cycle_gcd(d: Digraph) -> int:
    """gcd of all directed cycle lengths, 0 when ``d`` is acyclic.

    Inside each strong component a BFS levelling from its least vertex gives
    ``gcd(level[u] + 1 - level[v])`` over the component's arcs ``u -> v``.
    """
    g = 0
    for comp in strongly_connected_components(d):
        if len(comp) < 2:
            continue
        cmask = _mask(comp)
        level = {comp[0]: 0}
        queue = [comp[0]]
        for u in queue:
            for v in bits(d.succ[u] & cmask):
                if v not in level:
                    level[v] = level[u] + 1
                    queue.append(v)
        for u in comp:
            for v in bits(d.succ[u] & cmask):
                g = gcd(g, abs(level[u] + 1 - level[v]))
    return g


@dataclass(frozen=True)
class PrimitivityReport:
    strongly_connected: bool
    cycle_gcd: int
    primitive: bool
    exponent: int | None = None


def wielandt_bound(n: int) -> int:
    return (n - 1) ** 2 + 1


def primitivity(d: Digraph) -> PrimitivityReport:
    sc = len(strongly_connected_components(d)) == 1
    g = cycle_gcd(d)
    primitive = sc and g == 1 and d.n >= 2
    exponent = None
    if primitive:
        a = d.adjacency()
        p = a
        t = 1
        cap = wielandt_bound(d.n)
        while not p.is_all_ones():
            t += 1
            if t > cap:
                raise ExponentOverflowError(f"no all-ones power up to {cap} for a primitive digraph")
            p = bool_multiply(p, a)
        exponent = t
    return PrimitivityReport(sc, g, primitive, exponent)
