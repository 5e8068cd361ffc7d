"""Per-instance theorem checkers and the corpus suite runner.

Every checker re-derives its hypotheses from the raw digraph (partition,
sinks, cycles, primitivity) instead of trusting how the instance was made.
Statements quantified over all ``m >= 1`` are certified on the finite window
of the eventually periodic power sequence, which covers every ``m``.
"""

from __future__ import annotations

import json
import random
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import cached_property
from math import comb, gcd
from pathlib import Path
from typing import Callable, Iterable, Iterator, Sequence

from .competition import CompetitionProfile, competition_profile
from .core import (
    BooleanMatrix,
    Digraph,
    SimpleGraph,
    bits,
    bool_multiply,
    infer_partition,
    primitivity,
    strongly_connected_components,
    wielandt_bound,
)
from .errors import NotMultipartiteError, TheoremViolation
from .formats import format_digraph, parse_digraph, read_digraph
from .generators import (
    enumerate_orientations,
    gen_acyclic_kpartite,
    gen_mixed_cycle_digraph,
    gen_random_kpartite,
    gen_sink_cycle_kpartite,
    gen_strong_tournament,
    gen_transitive_tournament,
    gen_zeta_tournament,
    random_layer_spec,
    random_part_sizes,
    sink_cycle_feasible,
)
from .sinks import UNBOUNDED, TerminalKind, is_acyclic, sink_sequence, walk_length_spectrum
from .structure import (
    VertexType,
    WalkType,
    find_holes4,
    find_triangles,
    is_walk,
    longest_cycle_length,
    score_sequence,
    shortest_path,
    vertex_type,
    walk_contains,
)

SCHEMA_VERSION = 1

CLAIM_IDS = (
    "P2.1", "L2.2", "T2.3", "T2.4", "C2.5", "C2.6", "L2.7", "T2.8",
    "P3.1", "L3.3", "L3.4", "L3.5", "L3.6", "L3.7", "T3.8", "T3.9",
    "P4.1", "T4.2", "P4.3",
    "T5.1", "P5.2", "C5.3", "T5.4",
)


@dataclass(frozen=True)
class Caps:
    pump_cap: int | None = None  # None: 4n^2 + 12
    walk_enum_n_max: int = 6
    longest_cycle_n_max: int = 20
    monotone_m_max: int = 10

    def pump_limit(self, n: int) -> int:
        return self.pump_cap if self.pump_cap is not None else 4 * n * n + 12


@dataclass(frozen=True)
class ClaimResult:
    claim_id: str
    applicable: bool
    passed: bool = False
    witness: str | None = None
    detail: str | None = None


def _na(cid: str) -> ClaimResult:
    return ClaimResult(cid, False)


def _ok(cid: str, detail: str | None = None) -> ClaimResult:
    return ClaimResult(cid, True, True, None, detail)


def _fail(cid: str, witness: str, detail: str | None = None) -> ClaimResult:
    return ClaimResult(cid, True, False, witness, detail)


def _mask(vs: Iterable[int]) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


class Instance:
    """Lazily computed structure of one digraph shared by all checkers."""

    def __init__(self, d: Digraph, caps: Caps):
        self.d = d
        self.caps = caps
        self._powers: list[BooleanMatrix] = [d.adjacency()]

    @cached_property
    def ss(self):
        return sink_sequence(self.d)

    @cached_property
    def profile(self) -> CompetitionProfile:
        return competition_profile(self.d)

    @cached_property
    def acyclic(self) -> bool:
        return is_acyclic(self.d)

    @cached_property
    def partition(self) -> tuple[int, ...] | None:
        if self.d.partition is not None:
            return self.d.partition
        try:
            return infer_partition(self.d.n, self.d.succ)
        except NotMultipartiteError:
            return None

    @cached_property
    def k(self) -> int:
        return 0 if self.partition is None else len(set(self.partition))

    @property
    def multipartite(self) -> bool:
        return self.k >= 2

    @cached_property
    def tournament(self) -> bool:
        return self.d.is_tournament()

    @cached_property
    def has_sink(self) -> bool:
        return bool(self.d.sinks())

    @cached_property
    def triangles(self):
        return find_triangles(self.d).triangles

    @cached_property
    def holes(self):
        return find_holes4(self.d).holes

    @cached_property
    def dist(self) -> list[list[int | None]]:
        """All-pairs shortest path lengths (``None`` when unreachable)."""
        d = self.d
        table = []
        for s in range(d.n):
            row: list[int | None] = [None] * d.n
            row[s] = 0
            frontier, seen, level = 1 << s, 1 << s, 0
            while frontier:
                level += 1
                nxt = 0
                for u in bits(frontier):
                    nxt |= d.succ[u]
                frontier = nxt & ~seen
                seen |= frontier
                for v in bits(frontier):
                    row[v] = level
            table.append(row)
        return table

    @cached_property
    def eliminated(self) -> tuple[int, ...]:
        return self.ss.eliminated

    def power(self, m: int) -> BooleanMatrix:
        a = self._powers[0]
        while len(self._powers) < m:
            self._powers.append(bool_multiply(self._powers[-1], a))
        return self._powers[m - 1]

    def walk_of_length(self, u: int, w: int, m: int) -> bool:
        return bool(self.power(m)[u, w]) if m >= 1 else u == w

    def all_m_from(self, start: int) -> range:
        """Powers ``m`` in ``[start, ...)`` enough to see every ``C^m`` with ``m >= start``."""
        p = self.profile
        return range(start, max(p.window_end, start + p.matrix_period - 1) + 1)

    def route(self, u: int, w: int, cycles: Sequence[Sequence[int]]) -> list[int] | None:
        """Walk from ``u`` around each cycle in turn (entering at the nearest
        vertex) and on to ``w``."""
        d = self.d
        walk = [u]
        for c in cycles:
            seg = shortest_path(d, walk[-1], _mask(c))
            if seg is None:
                return None
            walk.extend(seg[1:])
            i = c.index(walk[-1])
            walk.extend(c[(i + j) % len(c)] for j in range(1, len(c) + 1))
        seg = shortest_path(d, walk[-1], 1 << w)
        if seg is None:
            return None
        walk.extend(seg[1:])
        return walk

    def route_length(self, u: int, w: int, cycles: Sequence[Sequence[int]]) -> int | None:
        """Length of :meth:`route` without building it."""
        dist = self.dist
        cur, total = u, 0
        for c in cycles:
            best = None
            for x in c:
                dx = dist[cur][x]
                if dx is not None and (best is None or dx < best[0]):
                    best = (dx, x)
            if best is None:
                return None
            total += best[0] + len(c)
            cur = best[1]
        if dist[cur][w] is None:
            return None
        return total + dist[cur][w]

    def best_route(self, u: int, w: int, chains: Iterable[Sequence[Sequence[int]]]) -> list[int] | None:
        best = None
        for chain in chains:
            ln = self.route_length(u, w, chain)
            if ln is not None and (best is None or ln < best[0]):
                best = (ln, chain)
        return None if best is None else self.route(u, w, best[1])


def _clique_on(n: int, vertices: Iterable[int]) -> SimpleGraph:
    return SimpleGraph.complete(n, vertices)


def _fmt(g: SimpleGraph) -> str:
    return f"edges={list(g.edges)}"


# -- shape tests for the score-sequence table -----------------------------


def _is_clique_plus_isolated(g: SimpleGraph, size: int) -> bool:
    if size <= 1:
        return g.is_empty()
    vs = g.non_isolated()
    return len(vs) == size and len(g.edges) == comb(size, 2)


def _complement_is_path(g: SimpleGraph, t: int) -> bool:
    """``g`` is ``K_n - P_t`` (``t`` vertices, ``t - 1`` removed edges)."""
    c = g.complement()
    if t <= 1:
        return c.is_empty()
    vs = c.non_isolated()
    if len(vs) != t or len(c.edges) != t - 1:
        return False
    if any(c.degree(v) > 2 for v in vs):
        return False
    seen = 1 << vs[0]
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= c.neighbours[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == _mask(vs)


def _complement_is_triangle(g: SimpleGraph) -> bool:
    c = g.complement()
    vs = c.non_isolated()
    return len(vs) == 3 and len(c.edges) == 3


SHAPES: dict[str, Callable[[SimpleGraph], bool]] = {
    "K_n": lambda g: g.is_complete(),
    "K_n-P_2": lambda g: _complement_is_path(g, 2),
    "K_n-P_3": lambda g: _complement_is_path(g, 3),
    "K_n-P_4": lambda g: _complement_is_path(g, 4),
    "K_n-C_3": _complement_is_triangle,
    "K_{n-1}+I_1": lambda g: _is_clique_plus_isolated(g, g.n - 1),
    "K_{n-2}+I_2": lambda g: _is_clique_plus_isolated(g, g.n - 2),
}


def _shape_of(g: SimpleGraph, allowed: Sequence[str]) -> str | None:
    for name in allowed:
        if SHAPES[name](g):
            return name
    return None


def score_table(scores: Sequence[int], m: int) -> tuple[str, ...] | None:
    """Admissible shapes of ``C^m`` of a tournament with these scores, or
    ``None`` where the table is silent."""
    s = list(scores) + [None, None]
    s1, s2, s3 = s[0], s[1], s[2]
    if m == 2:
        if s1 == 0 and s2 == 1:
            return ("K_{n-2}+I_2",)
        if s1 == 0 and s2 is not None and s2 >= 2:
            return ("K_{n-1}+I_1",)
        if s1 == 1 and s2 is not None and s2 >= 2:
            return ("K_n", "K_n-P_2", "K_n-P_3")
        if s1 == 1 and s2 == 1 and s3 is not None and s3 >= 2:
            return ("K_n-P_3", "K_n-P_4")
        if s1 is not None and s1 >= 2:
            return ("K_n",)
        return None
    if m >= 3:
        if (s1 == 1 and s2 is not None and s2 >= 2) or (s1 is not None and s1 >= 2):
            return ("K_n",)
        if s1 == 1 and s2 == 1 and s3 is not None and s3 >= 2:
            return ("K_n-P_2",) if m == 3 else ("K_n",)
        if s1 == 1 and s2 == 1 and s3 == 1:
            return ("K_n-C_3",)
    return None


# -- checkers ----------------------------------------------------------------


def check_p21(x: Instance) -> ClaimResult:
    ss = x.ss
    ii = ss.terminal_kind is TerminalKind.ALL_SINKS and len(ss.layers[-1]) > 0
    iii = sum(len(layer) for layer in ss.layers) == x.d.n
    if x.acyclic == ii == iii:
        return _ok("P2.1")
    return _fail("P2.1", f"acyclic={x.acyclic} all_sinks={ii} covers={iii}")


def check_l22(x: Instance) -> ClaimResult:
    ss = x.ss
    if ss.zeta < 1:
        return _na("L2.2")
    top = ss.zeta + 1 if x.acyclic else ss.zeta
    for i in range(top):
        for v in ss.layers[i]:
            spec = walk_length_spectrum(x.d, v)
            if spec is UNBOUNDED or spec != frozenset(range(i + 1)):
                return _fail("L2.2", f"vertex {v} in W_{i} has walk lengths {spec}")
    return _ok("L2.2")


def check_t23(x: Instance) -> ClaimResult:
    ss = x.ss
    if not x.acyclic or ss.zeta < 1:
        return _na("T2.3")
    z, p = ss.zeta, x.profile
    for m in x.all_m_from(z + 1):
        if not p.graph(m).is_empty():
            return _fail("T2.3", f"(i) C^{m} nonempty: {_fmt(p.graph(m))}")
    if p.cperiod_literal != 1:
        return _fail("T2.3", f"(ii) cperiod={p.cperiod_literal}")
    if any(len(ss.layers[i]) == 1 for i in range(z)):
        want = _clique_on(x.d.n, ss.layers[z])
        if p.graph(z) != want:
            return _fail("T2.3", f"(iii) C^{z} {_fmt(p.graph(z))} != clique on W_zeta")
    if p.cindex > z + 1:
        return _fail("T2.3", f"(iv) cindex={p.cindex} > zeta+1={z + 1}")
    if any(len(ss.layers[z]) > len(ss.layers[i]) for i in range(z)) and p.cindex != z + 1:
        return _fail("T2.3", f"(iv) cindex={p.cindex} but equality case forces {z + 1}")
    return _ok("T2.3")


def _acyclic_mpt(x: Instance, k_min: int) -> bool:
    return x.acyclic and x.multipartite and x.k >= k_min


def _layer_parts(x: Instance) -> list[int] | None:
    """Part of each layer, or ``None`` if some layer straddles parts."""
    out = []
    for layer in x.ss.layers:
        ps = {x.partition[v] for v in layer}
        if len(ps) != 1:
            return None
        out.append(ps.pop())
    return out


def check_t24(x: Instance) -> ClaimResult:
    if not _acyclic_mpt(x, 2):
        return _na("T2.4")
    ss = x.ss
    lp = _layer_parts(x)
    if lp is None:
        return _fail("T2.4", "(i) a layer meets two partite sets")
    layer = {v: i for i, L in enumerate(ss.layers) for v in L}
    for u, v in x.d.arcs:
        if not (layer[u] > layer[v] and lp[layer[u]] != lp[layer[v]]):
            return _fail("T2.4", f"(ii) arc {(u, v)} from W_{layer[u]} to W_{layer[v]}")
    for i in range(ss.zeta):
        for a in ss.layers[i + 1]:
            for b in ss.layers[i]:
                if not x.d.has_arc(a, b):
                    return _fail("T2.4", f"(iii) missing arc {(a, b)} from W_{i + 1} to W_{i}")
    return _ok("T2.4")


def check_c25(x: Instance) -> ClaimResult:
    if not _acyclic_mpt(x, 2):
        return _na("C2.5")
    z, k = x.ss.zeta, x.k
    if z < k - 1:
        return _fail("C2.5", f"zeta={z} < k-1={k - 1}")
    parts = {frozenset(bits(m)) for m in _part_masks(x)}
    full = all(frozenset(L) in parts for L in x.ss.layers)
    if (z == k - 1) != full:
        return _fail("C2.5", f"zeta={z}, k={k}, every layer a full part: {full}")
    return _ok("C2.5")


def _part_masks(x: Instance) -> list[int]:
    masks = [0] * x.k
    for v, p in enumerate(x.partition):
        masks[p] |= 1 << v
    return masks


def check_c26(x: Instance) -> ClaimResult:
    if not _acyclic_mpt(x, 3):
        return _na("C2.6")
    lp = _layer_parts(x)
    if lp is None:
        return _fail("C2.6", "a layer meets two partite sets")
    if any(lp[i] != lp[i + 2] for i in range(x.ss.zeta - 1)):
        return _ok("C2.6")
    return _fail("C2.6", f"layer parts {lp} alternate between two parts")


def check_l27(x: Instance) -> ClaimResult:
    if not _acyclic_mpt(x, 3):
        return _na("L2.7")
    ss = x.ss
    lp = _layer_parts(x)
    if lp is None:
        return _fail("L2.7", "a layer meets two partite sets")
    for s in range(1, ss.zeta + 1):
        lengths = {s - p + q + 1 for p in range(s + 1) for q in range(p) if lp[p] != lp[q]}
        for ln in sorted(lengths):
            a = x.power(ln)
            for u in ss.layers[s]:
                for z in ss.layers[0]:
                    if not a[u, z]:
                        return _fail("L2.7", f"no path of length {ln} from {u} in W_{s} to {z} in W_0")
    return _ok("L2.7")


def check_t28(x: Instance) -> ClaimResult:
    if not _acyclic_mpt(x, 3):
        return _na("T2.8")
    ss, p, n = x.ss, x.profile, x.d.n
    z = ss.zeta
    if p.graph(z) != _clique_on(n, ss.layers[z]):
        return _fail("T2.8", f"(i) C^{z} = {_fmt(p.graph(z))}")
    if z < 2:
        return _fail("T2.8", f"zeta={z} < 2 for k={x.k}")
    want = _clique_on(n, ss.layers[z] + ss.layers[z - 1])
    if p.graph(z - 1) != want:
        return _fail("T2.8", f"(ii) C^{z - 1} = {_fmt(p.graph(z - 1))}")
    expect = z + 1 if len(ss.layers[z]) >= 2 else z
    if p.cindex != expect:
        return _fail("T2.8", f"(iii) cindex={p.cindex}, expected {expect}")
    return _ok("T2.8", f"cindex=zeta+{p.cindex - z}")


def _sink_cycle_mpt(x: Instance) -> bool:
    return x.multipartite and x.has_sink and not x.acyclic


def check_p31(x: Instance) -> ClaimResult:
    if not _sink_cycle_mpt(x):
        return _na("P3.1")
    for m in x.all_m_from(1):
        if x.profile.graph(m).is_empty():
            return _fail("P3.1", f"C^{m} is empty")
    return _ok("P3.1")


def _typed_masks(x: Instance) -> list[tuple[int, int]]:
    out = [(_mask(t), 1) for t in x.triangles]
    out += [(_mask(h), 2) for h in x.holes]
    return out


def check_l33(x: Instance) -> ClaimResult:
    n = x.d.n
    if not x.multipartite or n < 3 or n > x.caps.walk_enum_n_max:
        return _na("L3.3")
    targets = [m for m, _ in _typed_masks(x)]
    succ = x.d.succ
    memo: dict[tuple[int, int, int], bool] = {}

    def typed(mask: int) -> bool:
        return any(t & mask == t for t in targets)

    # every walk of length >= n extends one of length exactly n, so only those
    # need enumerating; a prefix already of Type 1/2 settles all extensions
    def all_typed(v: int, mask: int, left: int) -> bool:
        if typed(mask):
            return True
        if left == 0:
            return False
        key = (v, mask, left)
        if key not in memo:
            memo[key] = all(all_typed(w, mask | (1 << w), left - 1) for w in bits(succ[v]))
        return memo[key]

    for v in range(n):
        if not all_typed(v, 1 << v, n):
            return _fail("L3.3", f"a walk of length {n} from {v} is of neither type")
    return _ok("L3.3")


def _first_run(x: Instance, u: int, w: int, lengths: Callable[[int], Iterable[int]], cap: int, n_max: int):
    """Least ``N`` in ``[1, n_max]`` whose run ``lengths(N)`` is fully realised
    by ``(u, w)``-walks, all lengths staying within ``cap``."""
    for big_n in range(1, n_max + 1):
        run = list(lengths(big_n))
        if max(run) > cap:
            return None
        if all(x.walk_of_length(u, w, ln) for ln in run):
            return big_n
    return None


def check_l34(x: Instance) -> ClaimResult:
    if not x.multipartite or not x.triangles:
        return _na("L3.4")
    d = x.d
    chains = [[t] for t in x.triangles]
    pairs = 0
    for u in range(d.n):
        for v in range(d.n):
            walk = x.best_route(u, v, chains)
            if walk is None:
                continue
            pairs += 1
            if not is_walk(d, walk) or not any(walk_contains(walk, t) for t in x.triangles):
                return _fail("L3.4", f"witness {walk} is not a Type-1 walk")
            ln = len(walk) - 1
            for m in range(1, 6):
                if not x.walk_of_length(u, v, ln + 3 * m):
                    return _fail("L3.4", f"({u},{v}) Type-1 walk of length {ln} but none of length {ln + 3 * m}")
    return _ok("L3.4", f"pairs={pairs}")


def check_l35(x: Instance) -> ClaimResult:
    if not x.multipartite or not x.holes:
        return _na("L3.5")
    d, part = x.d, x.partition
    cap = x.caps.pump_limit(d.n)
    eliminated = set(x.eliminated) if x.ss.zeta >= 1 else set()
    chains = [[h] for h in x.holes]
    checked = 0
    worst = 0
    for u in range(d.n):
        for w in range(d.n):
            walk = x.best_route(u, w, chains)
            if walk is None:
                continue
            if not is_walk(d, walk):
                return _fail("L3.5", f"witness {walk} is not a walk")
            on_walk = [h for h in x.holes if walk_contains(walk, h)]
            if not on_walk:
                return _fail("L3.5", f"witness {walk} is not of Type 2")
            hyp_i = w in eliminated
            hyp_ii = any(part[w] not in {part[h[0]], part[h[1]]} for h in on_walk)
            if not (hyp_i or hyp_ii):
                continue
            ln = len(walk) - 1
            big_n = _first_run(x, u, w, lambda nn: [ln + 2 * m for m in range(nn, nn + 6)], cap, cap)
            if big_n is None:
                return _fail("L3.5", f"({u},{w}) Type-2 walk of length {ln}: no run of l+2m within cap {cap}")
            checked += 1
            worst = max(worst, big_n)
    if not checked:
        return _na("L3.5")
    return _ok("L3.5", f"pairs={checked} max_N={worst}")


def _core_and_u(x: Instance):
    if x.ss.zeta < 1:
        return None
    return x.ss.core_vertices, x.eliminated


def check_l36(x: Instance) -> ClaimResult:
    if not x.multipartite or not x.triangles or not x.holes:
        return _na("L3.6")
    cu = _core_and_u(x)
    if cu is None:
        return _na("L3.6")
    core, elim = cu
    d = x.d
    cap = x.caps.pump_limit(d.n)
    chains = [[t, h] for t in x.triangles for h in x.holes] + [[h, t] for t in x.triangles for h in x.holes]
    checked = worst = 0
    for u in core:
        for w in elim:
            walk = x.best_route(u, w, chains)
            if walk is None:
                continue
            if not is_walk(d, walk):
                return _fail("L3.6", f"witness {walk} is not a walk")
            ln = len(walk) - 1
            big_n = _first_run(x, u, w, lambda nn: range(ln + nn, ln + nn + 7), cap, cap)
            if big_n is None:
                return _fail("L3.6", f"({u},{w}) mixed walk of length {ln}: no run of 7 lengths within cap {cap}")
            checked += 1
            worst = max(worst, big_n)
    if not checked:
        return _na("L3.6")
    return _ok("L3.6", f"pairs={checked} max_N={worst}")


def check_l37(x: Instance) -> ClaimResult:
    if not x.multipartite or x.acyclic:
        return _na("L3.7")
    cu = _core_and_u(x)
    if cu is None:
        return _na("L3.7")
    core, elim = cu
    d = x.d
    cap = x.caps.pump_limit(d.n)
    checked = worst = 0
    for u in core:
        ru = d.reach[u]
        reach1 = any((ru >> t[0]) & 1 and any((d.reach[t[0]] >> w) & 1 for w in elim) for t in x.triangles)
        reach2 = any((ru >> h[0]) & 1 and any((d.reach[h[0]] >> w) & 1 for w in elim) for h in x.holes)
        if not (reach1 and reach2):
            continue
        found = None
        for big_n in range(1, cap - 5):
            if all(x.walk_of_length(u, w, ln) for ln in range(big_n, big_n + 7) for w in elim):
                found = big_n
                break
        if found is None:
            return _fail("L3.7", f"vertex {u}: no run of 7 lengths reaching all of U within cap {cap}")
        checked += 1
        worst = max(worst, found)
    if not checked:
        return _na("L3.7")
    return _ok("L3.7", f"vertices={checked} max_N={worst}")


def check_t38(x: Instance) -> ClaimResult:
    if not x.multipartite or x.acyclic or x.ss.zeta < 1:
        return _na("T3.8")
    counts: Counter = Counter()
    for w in x.eliminated:
        try:
            counts[vertex_type(x.d, x.ss, w).value] += 1
        except TheoremViolation as exc:
            return _fail("T3.8", str(exc))
    return _ok("T3.8", ",".join(f"{t}={counts[t]}" for t in sorted(counts)))


def check_t39(x: Instance) -> ClaimResult:
    if not _sink_cycle_mpt(x):
        return _na("T3.9")
    p = x.profile
    bound = 2 if x.k == 2 else 3
    detail = f"k={x.k} cperiod={p.cperiod_literal} eventual={p.eventual_graph_period}"
    if p.cperiod_literal > bound:
        return _fail("T3.9", f"cperiod={p.cperiod_literal} > {bound}", detail)
    return _ok("T3.9", detail)


def check_p41(x: Instance) -> ClaimResult:
    if x.has_sink:
        return _na("P4.1")
    top = x.caps.monotone_m_max
    graphs = [x.profile.graph(m) for m in range(1, top + 1)]
    for big_m in range(1, top + 1):
        base = set(graphs[big_m - 1].edges)
        for m in range(big_m + 1, top + 1):
            if not base <= set(graphs[m - 1].edges):
                return _fail("P4.1", f"edge of C^{big_m} missing from C^{m}")
    return _ok("P4.1")


def check_t42(x: Instance) -> ClaimResult:
    rep = primitivity(x.d)
    if not rep.primitive:
        return _na("T4.2")
    e, p = rep.exponent, x.profile
    if e > wielandt_bound(x.d.n):
        return _fail("T4.2", f"exponent {e} exceeds Wielandt bound")
    for m in list(range(e, e + 6)) + list(x.all_m_from(e)):
        if not p.graph(m).is_complete():
            return _fail("T4.2", f"(i) C^{m} not complete, exp={e}")
    if p.cindex > e:
        return _fail("T4.2", f"(ii) cindex={p.cindex} > exp={e}")
    if p.cperiod_literal != 1:
        return _fail("T4.2", f"(iii) cperiod={p.cperiod_literal}")
    return _ok("T4.2", f"exp={e} cindex={p.cindex}")


def check_p43(x: Instance) -> ClaimResult:
    d = x.d
    if not x.multipartite or x.k < 4 or d.n > x.caps.longest_cycle_n_max:
        return _na("P4.3")
    if len(strongly_connected_components(d)) != 1:
        return _na("P4.3")
    if longest_cycle_length(d) != x.k:
        return _na("P4.3")
    bound = 5 + d.n if x.k == 4 else 2 + d.n
    ci = x.profile.cindex
    if ci > bound:
        return _fail("P4.3", f"cindex={ci} > {bound} (k={x.k}, n={d.n})")
    return _ok("P4.3", f"k={x.k} cindex={ci} bound={bound}")


def check_t51(x: Instance) -> ClaimResult:
    if not x.tournament or x.d.n < 2:
        return _na("T5.1")
    scores = score_sequence(x.d).scores
    p = x.profile
    seen = []
    for m in range(2, 9):
        allowed = score_table(scores, m)
        if allowed is None:
            continue
        g = p.graph(m)
        shape = _shape_of(g, allowed)
        if shape is None:
            return _fail("T5.1", f"scores={scores}: C^{m} {_fmt(g)} not in {allowed}")
        if len(allowed) > 1:
            seen.append(f"C^{m}={shape}")
    if score_table(scores, 2) is None and score_table(scores, 3) is None:
        return _na("T5.1")
    return _ok("T5.1", ";".join(seen) or None)


def check_p52(x: Instance) -> ClaimResult:
    if not x.tournament:
        return _na("P5.2")
    s = x.d.sinks()
    return _ok("P5.2") if len(s) <= 1 else _fail("P5.2", f"sinks {s}")


def check_c53(x: Instance) -> ClaimResult:
    if not x.tournament or x.d.n < 3:
        return _na("C5.3")
    if x.acyclic == (x.ss.zeta == x.d.n - 1):
        return _ok("C5.3")
    return _fail("C5.3", f"acyclic={x.acyclic} zeta={x.ss.zeta} n={x.d.n}")


def check_t54(x: Instance) -> ClaimResult:
    d = x.d
    if not x.tournament or d.n < 2 or not x.has_sink:
        return _na("T5.4")
    ss, p, n = x.ss, x.profile, d.n
    z = ss.zeta
    if not (1 <= z <= n - 1) or z == n - 2:
        return _fail("T5.4", f"(i) zeta={z}, n={n}")
    for m in range(1, z):
        want = _clique_on(n, set(ss.residual_vertices[m - 1]) - set(ss.layers[m - 1]))
        if p.graph(m) != want:
            return _fail("T5.4", f"(ii) C^{m} = {_fmt(p.graph(m))}")
    want = _clique_on(n, ss.residual_vertices[z])
    for m in x.all_m_from(z):
        if p.graph(m) != want:
            return _fail("T5.4", f"(iii) C^{m} = {_fmt(p.graph(m))}")
    if p.cperiod_literal != 1:
        return _fail("T5.4", f"(iv) cperiod={p.cperiod_literal}")
    if p.cindex != z:
        return _fail("T5.4", f"(v) cindex={p.cindex} != zeta={z}")
    return _ok("T5.4", f"zeta={z}")


CHECKERS: dict[str, Callable[[Instance], ClaimResult]] = {
    "P2.1": check_p21, "L2.2": check_l22, "T2.3": check_t23, "T2.4": check_t24,
    "C2.5": check_c25, "C2.6": check_c26, "L2.7": check_l27, "T2.8": check_t28,
    "P3.1": check_p31, "L3.3": check_l33, "L3.4": check_l34, "L3.5": check_l35,
    "L3.6": check_l36, "L3.7": check_l37, "T3.8": check_t38, "T3.9": check_t39,
    "P4.1": check_p41, "T4.2": check_t42, "P4.3": check_p43,
    "T5.1": check_t51, "P5.2": check_p52, "C5.3": check_c53, "T5.4": check_t54,
}


def check_instance(d: Digraph, caps: Caps | None = None, claims: Sequence[str] | None = None) -> list[ClaimResult]:
    """Evaluate every claim (or the selected ``claims``) on ``d``."""
    x = Instance(d, caps or Caps())
    ids = CLAIM_IDS if claims is None else claims
    unknown = set(ids) - set(CHECKERS)
    if unknown:
        raise ValueError(f"unknown claim ids {sorted(unknown)}")
    return [CHECKERS[cid](x) for cid in ids]


# -- corpus and suite runner ---------------------------------------------------


def _ints(value) -> list[int]:
    return list(value) if isinstance(value, (list, tuple)) else [value]


def expand_corpus(spec: dict, base_dir: Path | None = None) -> Iterator[Digraph]:
    """Digraphs described by one corpus entry of a suite config."""
    g = spec["generator"]
    if g == "exhaustive":
        yield from enumerate_orientations(spec["part_sizes"])
    elif g == "transitive":
        for n in _ints(spec["n"]):
            yield gen_transitive_tournament(n)
    elif g == "zeta":
        for n in _ints(spec["n"]):
            for i in _ints(spec["i"]) if "i" in spec else [i for i in range(1, n) if i != n - 2]:
                yield gen_zeta_tournament(n, i)
    elif g == "acyclic-kpartite":
        yield gen_acyclic_kpartite(spec["layer_sizes"], spec["layer_parts"])
    elif g == "acyclic-kpartite-random":
        rng = random.Random(spec.get("seed", 0))
        ks = _ints(spec.get("k", [3, 4, 5]))
        for _ in range(spec["count"]):
            sizes, parts = random_layer_spec(rng, rng.choice(ks), spec.get("n_max", 12))
            yield gen_acyclic_kpartite(sizes, parts)
    elif g in ("random-kpartite", "sink-cycle"):
        rng = random.Random(spec.get("seed", 0))
        for _ in range(spec["count"]):
            if "part_sizes" in spec:
                sizes = spec["part_sizes"]
            else:
                while True:
                    k = rng.choice(_ints(spec["k"]))
                    sizes = random_part_sizes(rng, k, spec.get("n_min", 4), spec["n_max"])
                    if g != "sink-cycle" or sink_cycle_feasible(sizes):
                        break
            seed = rng.getrandbits(64)
            if g == "sink-cycle":
                yield gen_sink_cycle_kpartite(sizes, seed, spec.get("max_tries", 10_000))
            else:
                yield gen_random_kpartite(sizes, seed)
    elif g == "strong-tournament":
        rng = random.Random(spec.get("seed", 0))
        ns = _ints(spec["n"])
        for _ in range(spec["count"]):
            yield gen_strong_tournament(rng.choice(ns), rng.getrandbits(64))
    elif g == "mixed-cycle":
        for length in range(4, spec["max_length"] + 1):
            for j in range(2, length - 1):
                if gcd(length, length - j + 1) == 1:
                    yield gen_mixed_cycle_digraph(length, j)
    elif g == "file":
        path = Path(spec["path"])
        if base_dir is not None and not path.is_absolute():
            path = base_dir / path
        yield read_digraph(path)
    elif g == "inline":
        yield parse_digraph(spec["digraph"])
    else:
        raise ValueError(f"unknown generator {g!r}")


@dataclass
class ClaimTally:
    applicable: int = 0
    passed: int = 0
    failed: int = 0


@dataclass
class SuiteReport:
    corpus: list[dict]
    caps: dict
    claims: dict[str, ClaimTally]
    failures: list[dict]
    instances: int
    wall_time: float = 0.0
    observations: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "corpus": self.corpus,
            "caps": self.caps,
            "instances": self.instances,
            "claims": {cid: asdict(t) for cid, t in self.claims.items()},
            "failures": self.failures,
            "observations": self.observations,
            "wall_time": self.wall_time,
        }


def _check_job(job):
    iid, text, caps, claims = job
    d = parse_digraph(text)
    return iid, text, check_instance(d, caps, claims)


def _run_jobs(jobs: list, n_jobs: int):
    if n_jobs <= 1:
        return map(_check_job, jobs)
    pool = ProcessPoolExecutor(max_workers=n_jobs)
    try:
        return list(pool.map(_check_job, jobs, chunksize=max(1, len(jobs) // (8 * n_jobs))))
    finally:
        pool.shutdown()


def run_suite(config: dict, jobs: int = 1, base_dir: Path | None = None) -> SuiteReport:
    """Run every claim over the configured corpus and aggregate the results."""
    start = time.perf_counter()
    caps = Caps(**config.get("caps", {}))
    claims = config.get("claims")
    corpus = config["corpus"]
    work = []
    for si, spec in enumerate(corpus):
        entry_claims = spec.get("claims", claims)
        for j, d in enumerate(expand_corpus(spec, base_dir)):
            work.append(((si, j), format_digraph(d), caps, entry_claims))

    tallies = {cid: ClaimTally() for cid in (claims or CLAIM_IDS)}
    failures = []
    cperiods: Counter = Counter()
    period_mismatch = []
    shapes: Counter = Counter()
    vtypes: Counter = Counter()
    for (si, j), text, results in _run_jobs(work, jobs):
        for r in results:
            t = tallies.setdefault(r.claim_id, ClaimTally())
            if not r.applicable:
                continue
            t.applicable += 1
            if r.passed:
                t.passed += 1
            else:
                t.failed += 1
                failures.append({"instance": f"{si}:{j}", "digraph": text, "result": asdict(r)})
            if r.claim_id == "T3.9" and r.detail:
                fields = dict(kv.split("=") for kv in r.detail.split())
                cperiods[f"k={fields['k']} cperiod={fields['cperiod']}"] += 1
                if fields["cperiod"] != fields["eventual"]:
                    period_mismatch.append(f"{si}:{j}")
            elif r.claim_id == "T5.1" and r.detail:
                for part in r.detail.split(";"):
                    shapes[part] += 1
            elif r.claim_id == "T3.8" and r.detail:
                for part in r.detail.split(","):
                    name, cnt = part.split("=")
                    vtypes[name] += int(cnt)
    failures.sort(key=lambda f: tuple(int(t) for t in f["instance"].split(":")))
    report = SuiteReport(
        corpus=corpus,
        caps=asdict(caps),
        claims=tallies,
        failures=failures,
        instances=len(work),
        observations={
            "t39_cperiods": dict(sorted(cperiods.items())),
            "cperiod_vs_eventual_period_mismatch": period_mismatch,
            "t51_ambiguous_shapes": dict(sorted(shapes.items())),
            "t38_vertex_types": dict(sorted(vtypes.items())),
        },
    )
    report.wall_time = time.perf_counter() - start
    return report


def write_report(report: SuiteReport, path) -> None:
    Path(path).write_text(json.dumps(report.to_json(), indent=2, sort_keys=True) + "\n", encoding="utf-8")
