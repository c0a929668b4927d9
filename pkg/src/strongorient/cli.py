"""Command-line interface.

Subcommands: orient (run the pipeline on one graph file), verify (check a
graph + orientation pair), oracle (exact minimum by enumeration), gen
(emit in-scope corpus graphs), report (batch bound-check over a directory).

Exit codes for orient: 0 success, 1 parse error, 2 precondition violated,
3 construction failure (unless --fallback-baseline, which downgrades to the
guarantee-free orientation and exits 0 with a "no-bound" marker).  verify
exits 4 when the orientation is not strong; report exits 1 on any failure.
All JSON output is deterministic: sorted keys, no timestamps.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from pathlib import Path

from . import corpus, files
from .errors import ConstructionFailure, PreconditionError, StrongOrientError, TooLarge
from .graph import diameter, graph_edge_girth
from .mixed import MixedOrientation
from .oracle import min_oriented_diameter
from .pipeline import PipelineResult, baseline_strong_orientation, orient_diameter4, verify


def _write(path: str | Path, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")


def _dump_json(path: str | Path, payload: dict) -> None:
    _write(path, json.dumps(payload, indent=2, sort_keys=True) + "\n")


def _trace_text(o: MixedOrientation) -> str:
    lines = []
    for stage, eids in o.stage_log:
        for eid in eids:
            tail, head = o.arc(eid)
            lines.append(f"{stage}\t{eid}\t{tail}\t{head}")
    return "\n".join(lines) + "\n"


def cmd_orient(args: argparse.Namespace) -> int:
    try:
        g = files.parse_graph(Path(args.input).read_text(encoding="utf-8"))
    except (OSError, ValueError, PreconditionError) as exc:
        print(f"error: cannot read graph: {exc}", file=sys.stderr)
        return 1
    out = args.out or f"{args.input}.or.txt"
    report_path = args.json or f"{args.input}.report.json"
    try:
        result = orient_diameter4(g)
    except PreconditionError as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return 2
    except ConstructionFailure as exc:
        if not args.fallback_baseline:
            print(f"construction failed: {exc}", file=sys.stderr)
            return 3
        o = baseline_strong_orientation(g)
        _write(out, files.format_orientation(o))
        _dump_json(report_path, {
            "n": g.n, "m": g.m, "no_bound": True,
            "reason": str(exc), "strong": o.is_strong(),
            "directed_diameter": int(o.directed_diameter()),
        })
        print(f"fallback orientation written to {out} (no diameter bound)")
        return 0
    _write(out, files.format_orientation(result.orientation))
    _dump_json(report_path, result.report.to_json_dict())
    if args.trace:
        _write(args.trace, _trace_text(result.orientation))
    r = result.report
    status = "ok" if r.ok else "BOUND VIOLATION"
    print(f"{args.input}: girth {r.gstar}, directed diameter "
          f"{int(r.directed_diameter)} <= {r.bound}: {status}")
    return 0 if r.ok else 3


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        g = files.parse_graph(Path(args.graph).read_text(encoding="utf-8"))
        o = files.parse_orientation(Path(args.orientation).read_text(encoding="utf-8"), g)
    except (OSError, ValueError, PreconditionError, StrongOrientError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    strong = o.is_strong()
    diam = o.directed_diameter()
    payload = {
        "n": g.n, "m": g.m, "strong": strong,
        "directed_diameter": None if diam is math.inf else int(diam),
    }
    if args.json:
        _dump_json(args.json, payload)
    print(json.dumps(payload, sort_keys=True))
    return 0 if strong else 4


def cmd_oracle(args: argparse.Namespace) -> int:
    try:
        g = files.parse_graph(Path(args.input).read_text(encoding="utf-8"))
        result = min_oriented_diameter(g, max_edges=args.max_edges)
    except (OSError, PreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except TooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if result.min_diameter is math.inf:
        print("inf")
    else:
        print(int(result.min_diameter))
    return 0


def cmd_gen(args: argparse.Namespace) -> int:
    seed = args.seed
    if seed is None:
        seed = int(os.environ.get("ORIENT_SEED", "1"))
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = 0
    stream_seed = seed
    while written < args.count:
        for g, gstar in corpus.filter_in_scope(corpus.gen_candidates(stream_seed, count=40)):
            if args.gstar and gstar != args.gstar:
                continue
            path = out_dir / f"g{gstar}_{written:04d}.txt"
            _write(path, files.format_graph(g))
            written += 1
            if written >= args.count:
                break
        stream_seed += 1
        if stream_seed - seed > 4000:
            print("error: generation quota not met", file=sys.stderr)
            return 1
    print(f"wrote {written} graphs to {out_dir}")
    return 0


def cmd_report(args: argparse.Namespace) -> int:
    directory = Path(args.corpus_dir)
    paths = sorted(p for p in directory.rglob("*.txt") if p.is_file())
    if not paths:
        print(f"error: no graph files under {directory}", file=sys.stderr)
        return 1
    totals = {4: 0, 5: 0}
    passed = {4: 0, 5: 0}
    max_diam = {4: 0, 5: 0}
    failures: list[dict] = []
    for path in paths:
        g = files.parse_graph(path.read_text(encoding="utf-8"))
        try:
            result = orient_diameter4(g)
        except StrongOrientError as exc:
            failures.append({"file": str(path), "error": str(exc)})
            continue
        r = result.report
        totals[r.gstar] += 1
        if r.ok:
            passed[r.gstar] += 1
        else:
            failures.append({
                "file": str(path),
                "violations": r.cell_violations,
                "exact_failures": r.exact_failures,
            })
        max_diam[r.gstar] = max(max_diam[r.gstar], int(r.directed_diameter))
    summary = {
        "files": len(paths),
        "per_girth": {
            str(gs): {"count": totals[gs], "passed": passed[gs],
                      "bound": gs + 13, "max_directed_diameter": max_diam[gs]}
            for gs in (4, 5)
        },
        "failures": failures,
    }
    if args.json:
        _dump_json(args.json, summary)
    print(f"{'girth':>6} {'graphs':>7} {'passed':>7} {'max diam':>9} {'bound':>6}")
    for gs in (4, 5):
        print(f"{gs:>6} {totals[gs]:>7} {passed[gs]:>7} {max_diam[gs]:>9} {gs + 13:>6}")
    if failures:
        print(f"{len(failures)} failures", file=sys.stderr)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="strongorient",
        description="Strong orientations of bridgeless diameter-4 multigraphs "
                    "with a directed-diameter guarantee of edge girth + 13.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("orient", help="orient one graph file")
    p.add_argument("input")
    p.add_argument("--out", help="orientation file (default: INPUT.or.txt)")
    p.add_argument("--json", help="JSON report path (default: INPUT.report.json)")
    p.add_argument("--trace", help="write a stage/edge trace to this path")
    p.add_argument("--fallback-baseline", action="store_true",
                   help="on construction failure, fall back to the guarantee-free orientation")
    p.set_defaults(func=cmd_orient)

    p = sub.add_parser("verify", help="check strongness/diameter of an orientation file")
    p.add_argument("graph")
    p.add_argument("orientation")
    p.add_argument("--json")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="exact oriented diameter by enumeration")
    p.add_argument("input")
    p.add_argument("--max-edges", type=int, default=20)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", help="generate in-scope graphs")
    p.add_argument("--seed", type=int, default=None,
                   help="generator seed (default: ORIENT_SEED env var or 1)")
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--gstar", type=int, choices=(4, 5), default=None)
    p.add_argument("--out-dir", required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("report", help="batch bound-check over a corpus directory")
    p.add_argument("corpus_dir")
    p.add_argument("--json")
    p.set_defaults(func=cmd_report)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
