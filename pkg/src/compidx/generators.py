"""Constructions and enumerations of the digraph families under study.

Randomised generators draw from :class:`random.Random` (MT19937) seeded
with a 64-bit integer; for a fixed seed the stream, and therefore the
generated digraph, is identical on every platform.
"""

from __future__ import annotations

import random
from itertools import combinations
from typing import Iterator, Sequence

from .core import Digraph, build_digraph, strongly_connected_components
from .errors import ConsecutiveSamePartError, ExhaustedTriesError, InvalidZetaError, TooLargeError
from .sinks import is_acyclic

MAX_ENUM_PAIRS = 30


def _rng(seed: int) -> random.Random:
    return random.Random(seed & 0xFFFFFFFFFFFFFFFF)


def gen_transitive_tournament(n: int) -> Digraph:
    """Vertex ``l`` beats every ``k < l``; vertex 0 is the sink."""
    if n < 1:
        raise ValueError("n must be positive")
    succ = tuple((1 << l) - 1 for l in range(n))
    return Digraph(n, succ, tuple(range(n)))


def gen_zeta_tournament(n: int, i: int) -> Digraph:
    """Tournament with sink elimination index ``i``.

    Start from the transitive tournament on ``v_1..v_n`` (vertex ``j - 1``
    here is ``v_j``) and reverse the arc between ``v_n`` and ``v_{i+1}``,
    which closes the cycle ``v_n -> v_{n-1} -> ... -> v_{i+1} -> v_n``.
    """
    if n < 2 or not (1 <= i <= n - 1) or i == n - 2:
        raise InvalidZetaError(f"no tournament on {n} vertices has zeta={i}")
    d = gen_transitive_tournament(n)
    if i == n - 1:
        return d
    succ = list(d.succ)
    top, low = n - 1, i  # v_n and v_{i+1}
    succ[top] &= ~(1 << low)
    succ[low] |= 1 << top
    return Digraph(n, tuple(succ), d.partition)


def _contiguous(ids: Sequence[int]) -> list[int]:
    relabel = {p: j for j, p in enumerate(sorted(set(ids)))}
    return [relabel[p] for p in ids]


def gen_acyclic_kpartite(layer_sizes: Sequence[int], layer_parts: Sequence[int]) -> Digraph:
    """Acyclic multipartite tournament whose sink sequence is the given layers.

    Layer ``i`` gets the next ``layer_sizes[i]`` vertex labels (layer 0 first)
    and lies in part ``layer_parts[i]``; every pair in different parts is
    oriented from the higher layer to the lower one.
    """
    if len(layer_sizes) != len(layer_parts) or not layer_sizes:
        raise ValueError("need one part id per layer")
    if any(s < 1 for s in layer_sizes):
        raise ValueError("layer sizes must be positive")
    for i in range(1, len(layer_parts)):
        if layer_parts[i] == layer_parts[i - 1]:
            raise ConsecutiveSamePartError(f"layers {i - 1} and {i} share part {layer_parts[i]}")
    parts = _contiguous(layer_parts)
    layer_of = [i for i, s in enumerate(layer_sizes) for _ in range(s)]
    part = [parts[i] for i in layer_of]
    n = len(layer_of)
    succ = [0] * n
    for v in range(n):
        for u in range(v):
            if part[u] != part[v] and layer_of[u] < layer_of[v]:
                succ[v] |= 1 << u
    return Digraph(n, tuple(succ), tuple(part))


def _partition_of(part_sizes: Sequence[int]) -> list[int]:
    return [p for p, s in enumerate(part_sizes) for _ in range(s)]


def cross_pairs(part_sizes: Sequence[int]) -> list[tuple[int, int]]:
    part = _partition_of(part_sizes)
    return [(u, v) for u, v in combinations(range(len(part)), 2) if part[u] != part[v]]


def _orient(part_sizes: Sequence[int], pairs, flips: int) -> Digraph:
    n = sum(part_sizes)
    succ = [0] * n
    for j, (u, v) in enumerate(pairs):
        if (flips >> j) & 1:
            succ[v] |= 1 << u
        else:
            succ[u] |= 1 << v
    return Digraph(n, tuple(succ), tuple(_partition_of(part_sizes)))


def gen_random_kpartite(part_sizes: Sequence[int], seed: int) -> Digraph:
    """Orient each cross-part pair (in lexicographic order) by a fair coin."""
    if len(part_sizes) < 2 or any(s < 1 for s in part_sizes):
        raise ValueError("need at least two nonempty parts")
    pairs = cross_pairs(part_sizes)
    rng = _rng(seed)
    return _orient(part_sizes, pairs, rng.getrandbits(len(pairs)) if pairs else 0)


def has_sink_and_cycle(d: Digraph) -> bool:
    return bool(d.sinks()) and not is_acyclic(d)


def sink_cycle_feasible(part_sizes: Sequence[int]) -> bool:
    """Whether some orientation has both a sink and a directed cycle.

    Removing the sink must leave room for a cycle: a 3-cycle needs three
    nonempty parts, a 4-cycle two parts of size at least two.
    """
    for p in range(len(part_sizes)):
        rest = list(part_sizes)
        rest[p] -= 1
        if sum(1 for s in rest if s > 0) >= 3 or sum(1 for s in rest if s >= 2) >= 2:
            return True
    return False


def gen_sink_cycle_kpartite(part_sizes: Sequence[int], seed: int, max_tries: int = 10_000) -> Digraph:
    """Rejection-sample a multipartite tournament with a sink and a directed cycle.

    Part sizes admitting no such orientation fail immediately.
    """
    if sum(part_sizes) < 4 or not sink_cycle_feasible(part_sizes):
        raise ExhaustedTriesError(f"no orientation of {tuple(part_sizes)} has a sink and a directed cycle")
    rng = _rng(seed)
    for _ in range(max_tries):
        d = gen_random_kpartite(part_sizes, rng.getrandbits(64))
        if has_sink_and_cycle(d):
            return d
    raise ExhaustedTriesError(f"no sink+cycle orientation of {tuple(part_sizes)} in {max_tries} tries")


def enumerate_orientations(part_sizes: Sequence[int]) -> Iterator[Digraph]:
    """Every labelled orientation of the complete multipartite graph, in
    binary-counter order over the lexicographically ordered cross pairs."""
    pairs = cross_pairs(part_sizes)
    if len(pairs) > MAX_ENUM_PAIRS:
        raise TooLargeError(f"{len(pairs)} cross pairs exceed the limit of {MAX_ENUM_PAIRS}")
    for flips in range(1 << len(pairs)):
        yield _orient(part_sizes, pairs, flips)


def random_layer_spec(rng: random.Random, k: int, n_max: int) -> tuple[list[int], list[int]]:
    """Random ``(layer_sizes, layer_parts)`` using all ``k`` parts, no two
    consecutive layers in the same part, at most ``n_max`` vertices."""
    if n_max < k:
        raise ValueError("n_max must be at least k")
    n_layers = rng.randint(k, n_max)
    while True:
        parts = [rng.randrange(k)]
        for _ in range(n_layers - 1):
            parts.append(rng.choice([p for p in range(k) if p != parts[-1]]))
        if len(set(parts)) == k:
            break
    sizes = [1] * n_layers
    for _ in range(rng.randint(0, n_max - n_layers)):
        sizes[rng.randrange(n_layers)] += 1
    return sizes, parts


def random_part_sizes(rng: random.Random, k: int, n_min: int, n_max: int) -> list[int]:
    n = rng.randint(max(k, n_min), n_max)
    sizes = [1] * k
    for _ in range(n - k):
        sizes[rng.randrange(k)] += 1
    return sizes


def gen_mixed_cycle_digraph(length: int, chord_target: int) -> Digraph:
    """Directed cycle ``0 -> 1 -> ... -> length-1 -> 0`` plus the chord
    ``0 -> chord_target``, which closes a second cycle of length
    ``length - chord_target + 1``."""
    if not 2 <= chord_target <= length - 2:
        raise ValueError("chord target must lie in [2, length-2]")
    arcs = [(v, (v + 1) % length) for v in range(length)] + [(0, chord_target)]
    return build_digraph(length, arcs)


def gen_strong_tournament(n: int, seed: int, max_tries: int = 10_000) -> Digraph:
    """Rejection-sample a strongly connected tournament on ``n >= 3`` vertices."""
    rng = _rng(seed)
    for _ in range(max_tries):
        d = gen_random_kpartite([1] * n, rng.getrandbits(64))
        if len(strongly_connected_components(d)) == 1:
            return d
    raise ExhaustedTriesError(f"no strong tournament on {n} vertices in {max_tries} tries")
