"""Command-line front end: ``compidx analyze|gen|verify|power``.

Exit status: 0 success, 1 a verification suite found a falsifying instance,
2 usage or I/O error, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .competition import competition_profile
from .core import primitivity
from .errors import CompidxError, TheoremViolation
from .formats import (
    format_digraph,
    graph_to_dot,
    parse_digraph,
    read_digraph,
)
from .generators import (
    gen_acyclic_kpartite,
    gen_random_kpartite,
    gen_sink_cycle_kpartite,
    gen_transitive_tournament,
    gen_zeta_tournament,
)
from .sinks import is_acyclic, sink_sequence
from .structure import vertex_type
from .verification import CLAIM_IDS, check_instance, run_suite, write_report

EXIT_OK, EXIT_FALSIFIED, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


def _int_list(text: str) -> list[int]:
    return [int(t) for t in text.split(",") if t.strip()]


def _emit(text: str, dest: str | None) -> None:
    if dest is None or dest == "-":
        sys.stdout.write(text)
    else:
        Path(dest).write_text(text, encoding="utf-8")


def analyze_digraph(d) -> dict:
    ss = sink_sequence(d)
    prof = competition_profile(d)
    prim = primitivity(d)
    out = {
        "n": d.n,
        "zeta": ss.zeta,
        "sink_sequence": ss.to_json(),
        **prof.to_json(),
        "primitivity": {
            "strongly_connected": prim.strongly_connected,
            "cycle_gcd": prim.cycle_gcd,
            "primitive": prim.primitive,
            "exponent": prim.exponent,
        },
        "vertex_types": [],
    }
    multipartite = d.partition is not None and d.k >= 2
    if multipartite and ss.zeta >= 1 and not is_acyclic(d):
        out["vertex_types"] = [
            {"vertex": w, "type": vertex_type(d, ss, w).value} for w in ss.eliminated
        ]
    return out


def cmd_analyze(args) -> int:
    d = read_digraph(args.digraph, require_multipartite=False)
    if d.partition is None:
        try:
            d = read_digraph(args.digraph, require_multipartite=True)
        except CompidxError:
            pass
    report = analyze_digraph(d)
    prof = competition_profile(d)
    if args.dot:
        outdir = Path(args.dot)
        outdir.mkdir(parents=True, exist_ok=True)
        top = args.mmax or prof.window_end
        for m in range(1, top + 1):
            (outdir / f"C{m}.dot").write_text(graph_to_dot(prof.graph(m), f"C{m}"), encoding="utf-8")
    if args.json is not None:
        _emit(json.dumps(report, indent=2, sort_keys=True) + "\n", args.json)
    else:
        ss = report["sink_sequence"]
        print(f"n={d.n} zeta={ss['zeta']} terminal={ss['terminal']} layers={ss['layers']}")
        print(
            f"cindex={report['cindex']} cperiod={report['cperiod']} "
            f"eventual_period={report['eventual_period']} "
            f"matrix_index={report['matrix_index']} matrix_period={report['matrix_period']}"
        )
        p = report["primitivity"]
        print(f"primitive={p['primitive']} exponent={p['exponent']} cycle_gcd={p['cycle_gcd']}")
        for vt in report["vertex_types"]:
            print(f"vertex {vt['vertex']}: {vt['type']}")
        if args.mmax:
            for m in range(1, args.mmax + 1):
                print(f"C^{m}: {list(prof.graph(m).edges)}")
    return EXIT_OK


def cmd_gen(args) -> int:
    seed = args.seed if args.seed is not None else int(os.environ.get("COMPIDX_SEED", "0"))
    fam = args.family
    if fam == "transitive":
        d = gen_transitive_tournament(args.n)
    elif fam == "zeta":
        d = gen_zeta_tournament(args.n, args.i)
    elif fam == "acyclic-kpartite":
        if not args.spec:
            raise CompidxError("acyclic-kpartite needs --spec SIZES:PARTS, e.g. 2,1,2:0,1,0")
        sizes, parts = args.spec.split(":")
        d = gen_acyclic_kpartite(_int_list(sizes), _int_list(parts))
    elif fam == "random-kpartite":
        d = gen_random_kpartite(_int_list(args.parts), seed)
    else:
        d = gen_sink_cycle_kpartite(_int_list(args.parts), seed, args.max_tries)
    _emit(format_digraph(d), args.output)
    return EXIT_OK


def _replay_digraphs(path: Path):
    text = path.read_text(encoding="utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        return [("replay", parse_digraph(text))]
    records = data.get("failures", [data]) if isinstance(data, dict) else data
    return [(r.get("instance", "replay"), parse_digraph(r["digraph"])) for r in records]


def cmd_verify(args) -> int:
    if args.replay:
        failed = 0
        for iid, d in _replay_digraphs(Path(args.replay)):
            for r in check_instance(d):
                if r.applicable and not r.passed:
                    failed += 1
                    print(f"{iid} {r.claim_id} FAIL {r.witness}")
        print(f"replay: {failed} failing claim(s)")
        return EXIT_FALSIFIED if failed else EXIT_OK
    if not args.config:
        raise CompidxError("verify needs a suite config or --replay")
    cfg_path = Path(args.config)
    config = json.loads(cfg_path.read_text(encoding="utf-8"))
    report = run_suite(config, jobs=args.jobs, base_dir=cfg_path.parent)
    dest = args.report or config.get("report")
    if dest:
        write_report(report, dest)
    for cid in CLAIM_IDS:
        t = report.claims.get(cid)
        if t is None or not t.applicable:
            continue
        print(f"{cid}: applicable={t.applicable} passed={t.passed} failed={t.failed}")
    for f in report.failures[:20]:
        print(f"FAIL {f['instance']} {f['result']['claim_id']}: {f['result']['witness']}")
    if len(report.failures) > 20:
        print(f"... {len(report.failures) - 20} more failures")
    print(f"{report.instances} instances, {len(report.failures)} failure(s), {report.wall_time:.2f}s")
    return EXIT_FALSIFIED if report.failures else EXIT_OK


def cmd_power(args) -> int:
    if args.m < 1:
        raise CompidxError("-m must be a positive integer")
    d = read_digraph(args.digraph)
    g = competition_profile(d).graph(args.m)
    _emit(graph_to_dot(g, f"C{args.m}"), args.dot)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="compidx", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="sink sequence, competition profile, vertex types, primitivity")
    p.add_argument("digraph")
    p.add_argument("--mmax", type=int, default=None, help="largest m for listed / exported C^m")
    p.add_argument("--json", default=None, metavar="OUT", help="write JSON ('-' for stdout)")
    p.add_argument("--dot", default=None, metavar="DIR", help="write C1.dot, C2.dot, ... into DIR")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("gen", help="generate a digraph in the text format")
    p.add_argument("family", choices=["transitive", "zeta", "acyclic-kpartite", "random-kpartite", "sink-cycle"])
    p.add_argument("--n", type=int)
    p.add_argument("--i", type=int)
    p.add_argument("--spec", help="layer sizes and parts, e.g. 2,1,2:0,1,0")
    p.add_argument("--parts", default="2,3", help="part sizes, e.g. 3,3")
    p.add_argument("--max-tries", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("config", nargs="?")
    p.add_argument("--report", default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--replay", default=None, help="re-check instances from a failure/report file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("power", help="export C^M(D) as DOT")
    p.add_argument("digraph")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("--dot", default=None)
    p.set_defaults(func=cmd_power)
    return parser


def dispatch(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    if args.command == "gen":
        needs = {"transitive": ["n"], "zeta": ["n", "i"]}.get(args.family, [])
        missing = [f"--{a}" for a in needs if getattr(args, a) is None]
        if missing:
            print(f"compidx gen {args.family}: missing {' '.join(missing)}", file=sys.stderr)
            return EXIT_USAGE
    try:
        return args.func(args)
    except TheoremViolation as exc:
        print(f"compidx: invariant violated: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (CompidxError, OSError, ValueError, KeyError) as exc:
        print(f"compidx: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except AssertionError as exc:
        print(f"compidx: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def main() -> None:
    sys.exit(dispatch())
