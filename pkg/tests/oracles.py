"""Brute-force reference implementations, deliberately naive and independent
of the bitset code paths they check."""

from __future__ import annotations

from itertools import combinations, permutations
from math import gcd


def walk_endpoints(arcs: dict[int, list[int]], u: int, m: int) -> set[int]:
    """Endpoints of every length-``m`` walk from ``u``, by explicit enumeration."""
    out = set()
    stack = [(u, 0)]
    while stack:
        v, ln = stack.pop()
        if ln == m:
            out.add(v)
            continue
        for w in arcs[v]:
            stack.append((w, ln + 1))
    return out


def competition_edges_by_walks(n: int, arc_list, m: int) -> set[tuple[int, int]]:
    arcs = {v: [] for v in range(n)}
    for u, v in arc_list:
        arcs[u].append(v)
    ends = [walk_endpoints(arcs, u, m) for u in range(n)]
    return {(u, v) for u, v in combinations(range(n), 2) if ends[u] & ends[v]}


def simple_cycle_lengths(n: int, arc_list) -> set[int]:
    arcs = set(arc_list)
    lengths = set()
    for r in range(2, n + 1):
        for sub in combinations(range(n), r):
            first, rest = sub[0], sub[1:]
            for perm in permutations(rest):
                cyc = (first,) + perm
                if all((cyc[i], cyc[(i + 1) % r]) in arcs for i in range(r)):
                    lengths.add(r)
                    break
            if r in lengths:
                break
    return lengths


def cycle_gcd_brute(n: int, arc_list) -> int:
    g = 0
    for ln in simple_cycle_lengths(n, arc_list):
        g = gcd(g, ln)
    return g


def triangles_brute(n: int, arc_list) -> set[frozenset]:
    arcs = set(arc_list)
    return {
        frozenset(t)
        for t in permutations(range(n), 3)
        if (t[0], t[1]) in arcs and (t[1], t[2]) in arcs and (t[2], t[0]) in arcs
    }


def holes_brute(n: int, arc_list) -> set[frozenset]:
    arcs = set(arc_list)
    adj = arcs | {(v, u) for u, v in arcs}
    found = set()
    for q in permutations(range(n), 4):
        if all((q[i], q[(i + 1) % 4]) in arcs for i in range(4)):
            if (q[0], q[2]) not in adj and (q[1], q[3]) not in adj:
                found.add(frozenset(q))
    return found


def frobenius_brute(ps) -> int:
    ps = sorted(set(ps))
    limit = 4 * ps[-1] ** 2
    rep = [False] * (limit + 1)
    rep[0] = True
    for b in range(1, limit + 1):
        rep[b] = any(b >= p and rep[b - p] for p in ps)
    missing = [b for b in range(limit + 1) if not rep[b]]
    return missing[-1] if missing else -1


def exponent_brute(n: int, arc_list, t_max: int) -> int | None:
    """Least t with every entry of A^t positive, by integer matrix powers."""
    a = [[0] * n for _ in range(n)]
    for u, v in arc_list:
        a[u][v] = 1
    p = [row[:] for row in a]
    for t in range(1, t_max + 1):
        if all(x > 0 for row in p for x in row):
            return t
        p = [[min(1, sum(p[i][k] * a[k][j] for k in range(n))) for j in range(n)] for i in range(n)]
    return None
