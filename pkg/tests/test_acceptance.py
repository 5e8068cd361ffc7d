"""Acceptance criteria, one test per criterion.

Each test prints a single ``[ACCEPT n] PASS|FAIL ...`` line.  Run with
``pytest tests/test_acceptance.py -v`` or directly as a script.
"""

from __future__ import annotations

import random
import sys
import time
from functools import reduce
from math import gcd

from compidx.competition import m_step_competition_graph
from compidx.core import build_digraph
from compidx.formats import format_digraph, parse_digraph
from compidx.generators import enumerate_orientations, gen_random_kpartite
from compidx.structure import frobenius
from compidx.verification import expand_corpus, run_suite

from oracles import competition_edges_by_walks, frobenius_brute

EXHAUSTIVE_TOURNAMENTS = [
    {"generator": "exhaustive", "part_sizes": [1] * 5},
    {"generator": "exhaustive", "part_sizes": [1] * 6},
]
ACYCLIC = {"generator": "acyclic-kpartite-random", "count": 500, "seed": 2024, "k": [3, 4, 5], "n_max": 12}
SINK_CYCLE = {"generator": "sink-cycle", "count": 500, "seed": 7, "k": [2, 3, 4], "n_min": 4, "n_max": 10}
PRIMITIVE = [
    {"generator": "strong-tournament", "count": 171, "seed": 11, "n": [4, 5, 6, 7, 8]},
    {"generator": "mixed-cycle", "max_length": 12},
]


def _report(capsys, n: int, ok: bool, msg: str) -> None:
    line = f"[ACCEPT {n}] {'PASS' if ok else 'FAIL'} {msg}"
    if capsys is None:
        print(line)
    else:
        with capsys.disabled():
            print("\n" + line)


def _summary(report, claims) -> str:
    return " ".join(
        f"{c}={report.claims[c].passed}/{report.claims[c].applicable}" for c in claims if c in report.claims
    )


def _first_failures(report, k=3) -> str:
    out = []
    for f in report.failures[:k]:
        out.append(f"{f['instance']} {f['result']['claim_id']}: {f['result']['witness']}")
    return "; ".join(out)


def test_criterion_1_tournaments_with_sinks(capsys):
    claims = ["T5.4", "P5.2", "C5.3"]
    rep = run_suite({"corpus": EXHAUSTIVE_TOURNAMENTS, "claims": claims})
    t54 = rep.claims["T5.4"]
    # exactly the tournaments with a sink: n * (n-1)-tournaments on the rest
    expected = 5 * 2 ** 6 + 6 * 2 ** 10
    ok = rep.ok and t54.applicable == expected and rep.instances == 1024 + 32768 and rep.wall_time < 60
    _report(capsys, 1, ok, f"{_summary(rep, claims)} time={rep.wall_time:.1f}s (<60s) {_first_failures(rep)}")
    assert ok


def test_criterion_2_score_sequence_table(capsys):
    rep = run_suite({"corpus": EXHAUSTIVE_TOURNAMENTS, "claims": ["T5.1"]})
    t = rep.claims["T5.1"]
    # failures outside the s1 = s2 = 1, s3 >= 2 row at m = 3
    other = [
        f for f in rep.failures
        if "C^3" not in f["result"]["witness"] or "'K_n-P_2'" not in f["result"]["witness"]
    ]
    ok = rep.ok and rep.wall_time < 120
    _report(
        capsys,
        2,
        ok,
        f"T5.1={t.passed}/{t.applicable} failed={t.failed} other_rows_failed={len(other)} time={rep.wall_time:.1f}s (<120s) "
        f"{_first_failures(rep, 1)}",
    )
    assert ok, _first_failures(rep, 5)


def test_criterion_3_acyclic_kpartite(capsys):
    claims = ["T2.8", "T2.4", "C2.5", "C2.6", "L2.7"]
    start = time.perf_counter()
    rep = run_suite({"corpus": [ACYCLIC], "claims": claims})
    round_trip = all(parse_digraph(format_digraph(d)) == d for d in expand_corpus(ACYCLIC))
    elapsed = time.perf_counter() - start
    ok = rep.ok and round_trip and rep.claims["T2.8"].applicable == 500 and elapsed < 60
    _report(capsys, 3, ok, f"{_summary(rep, claims)} round_trip={round_trip} time={elapsed:.1f}s (<60s)")
    assert ok, _first_failures(rep, 5)


def test_criterion_4_sink_cycle_multipartite(capsys):
    claims = ["T3.9", "P3.1", "T3.8"]
    rep = run_suite({"corpus": [SINK_CYCLE], "claims": claims})
    observed = rep.observations["t39_cperiods"]
    cperiods = {int(key.split("cperiod=")[1]) for key in observed}
    bip = {int(key.split("cperiod=")[1]) for key in observed if key.startswith("k=2 ")}
    ok = (
        rep.ok
        and rep.claims["T3.9"].applicable == 500
        and cperiods <= {1, 2, 3}
        and bip <= {1, 2}
        and rep.wall_time < 180
    )
    _report(
        capsys,
        4,
        ok,
        f"{_summary(rep, claims)} cperiods={dict(observed)} time={rep.wall_time:.1f}s (<180s) "
        f"{_first_failures(rep)}",
    )
    assert ok


def test_criterion_5_primitive(capsys):
    claims = ["T4.2", "P4.3"]
    rep = run_suite({"corpus": PRIMITIVE, "claims": claims})
    ok = rep.ok and rep.instances == 200 and rep.claims["T4.2"].applicable == 200 and rep.wall_time < 120
    _report(capsys, 5, ok, f"{_summary(rep, claims)} time={rep.wall_time:.1f}s (<120s) {_first_failures(rep)}")
    assert ok


def _mixed_small_corpus():
    yield from enumerate_orientations([1] * 4)
    yield from enumerate_orientations([1] * 5)
    yield from enumerate_orientations([2, 2])
    yield from enumerate_orientations([2, 2, 2])
    rng = random.Random(6)
    for _ in range(300):
        n = rng.randint(1, 6)
        arcs = []
        for u in range(n):
            for v in range(u + 1, n):
                o = rng.randrange(3)
                if o == 1:
                    arcs.append((u, v))
                elif o == 2:
                    arcs.append((v, u))
        yield build_digraph(n, arcs)
    for s in range(100):
        yield gen_random_kpartite([2, 2, 1, 1], s)


def test_criterion_6_oracle_equivalence(capsys):
    start = time.perf_counter()
    checked = mismatches = 0
    first = None
    for d in _mixed_small_corpus():
        arcs = d.arcs
        for m in range(1, 7):
            checked += 1
            if set(m_step_competition_graph(d, m).edges) != competition_edges_by_walks(d.n, arcs, m):
                mismatches += 1
                first = first or (format_digraph(d), m)
    elapsed = time.perf_counter() - start
    ok = mismatches == 0 and elapsed < 60
    _report(capsys, 6, ok, f"pairs(D,m)={checked} mismatches={mismatches} time={elapsed:.1f}s (<60s)")
    assert ok, first


def test_criterion_7_lemma_suite(capsys):
    claims = ["L2.2", "L3.3", "L3.4", "L3.5", "L3.6", "L3.7"]
    corpus = [
        ACYCLIC,
        SINK_CYCLE,
        {"generator": "sink-cycle", "count": 300, "seed": 8, "k": [2, 3, 4], "n_min": 4, "n_max": 6},
        {"generator": "exhaustive", "part_sizes": [1] * 5},
    ]
    rep = run_suite({"corpus": corpus, "claims": claims})
    ok = rep.ok and rep.claims["L3.3"].applicable > 0 and rep.claims["L2.2"].applicable > 0 and rep.wall_time < 180
    _report(capsys, 7, ok, f"{_summary(rep, claims)} time={rep.wall_time:.1f}s (<180s) {_first_failures(rep)}")
    assert ok


def test_criterion_8_frobenius(capsys):
    start = time.perf_counter()
    exact = frobenius([3, 4]) == 5 and frobenius([2, 3]) == 1 and frobenius([3, 4, 5]) == 2
    rng = random.Random(40)
    sets = []
    while len(sets) < 50:
        ps = sorted({rng.randint(2, 40) for _ in range(rng.randint(2, 4))})
        if len(ps) >= 2 and reduce(gcd, ps) == 1:
            sets.append(ps)
    bad = [ps for ps in sets if frobenius(ps) != frobenius_brute(ps)]
    elapsed = time.perf_counter() - start
    ok = exact and not bad and elapsed < 5
    _report(capsys, 8, ok, f"exact={exact} random_sets=50 disagreements={len(bad)} time={elapsed:.2f}s (<5s)")
    assert ok, bad


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn(None)
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
