"""Command-line front end.

Subcommands: build (emit a Bell graph as JSON/DOT), reconstruct (modes
full | upper-auto | lower), classify, find-partition, verify, conjecture.
Graphs are accepted as graph6 strings or as paths to files whose first
non-blank line is one.  Exit code 0 means every requested check passed.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import lower, upper
from .bell import (
    FULL,
    at_least,
    at_most,
    bell_to_json,
    build_bell,
    scramble,
    unlabeled_from_graph6,
)
from .classify import classify_pair, oracle_isomorphic
from .graphs import from_graph6, to_graph6
from .lower import reconstruct_from_bk_report
from .suites import SUITE_NAMES, conjecture_search, run_suite


def _read_graph_text(arg: str) -> str:
    if os.path.exists(arg):
        with open(arg, "r", encoding="ascii") as fh:
            for line in fh:
                line = line.strip()
                if line:
                    return line
        raise SystemExit(f"no graph6 line found in {arg}")
    return arg.strip()


def _emit(payload: dict, path: str | None) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _variant_from_args(args: argparse.Namespace):
    if args.variant == "full":
        return FULL
    if args.k is None:
        raise SystemExit(f"--k is required for variant {args.variant}")
    return at_most(args.k) if args.variant == "atmost" else at_least(args.k)


def _cmd_build(args: argparse.Namespace) -> int:
    g = from_graph6(_read_graph_text(args.graph))
    b = build_bell(g, _variant_from_args(args), cap=args.cap)
    payload = bell_to_json(b)
    if args.dot:
        _write(args.dot, b.as_unlabeled().to_dot())
    if args.graph6_out:
        _write(args.graph6_out, b.as_unlabeled().to_graph6() + "\n")
    _emit(payload, args.out)
    return 0


def _cmd_reconstruct(args: argparse.Namespace) -> int:
    u = unlabeled_from_graph6(_read_graph_text(args.input))
    if args.mode == "full":
        report = upper.reconstruct_prime_report(u)
    elif args.mode == "upper-auto":
        report = upper.reconstruct_upper_auto(u)
    else:
        info = reconstruct_from_bk_report(u)
        payload = {
            "mode": "lower",
            "regime": info["regime"],
            "component_count": info["component_count"],
            "candidate_count": len(info["candidates"]),
            "candidate_edge_counts": info["candidate_edge_counts"],
            "pivot": info["pivot"],
            "result_graph6": to_graph6(info["result"]),
        }
        _emit(payload, args.out)
        return 0
    payload = {
        "mode": args.mode,
        "regime": report.regime,
        "pivot": report.pivot,
        "result_graph6": to_graph6(report.result) if report.result is not None else None,
        "possibilities": [
            {"graph6": to_graph6(p.graph), "when": p.k_condition}
            for p in report.possibilities
        ],
    }
    if report.candidate_sets is not None:
        payload["candidates"] = {
            "omega3": list(report.candidate_sets.omega3),
            "omega4": list(report.candidate_sets.omega4),
            "omega5": list(report.candidate_sets.omega5),
        }
    _emit(payload, args.out)
    return 0


def _cmd_classify(args: argparse.Namespace) -> int:
    g1 = from_graph6(_read_graph_text(args.g1))
    g2 = from_graph6(_read_graph_text(args.g2))
    equivalent, conditions = classify_pair(g1, args.k1, g2, args.k2)
    payload = {"equivalent": equivalent, "conditions": conditions}
    if args.oracle:
        payload["oracle"] = oracle_isomorphic(g1, args.k1, g2, args.k2)
    _emit(payload, args.out)
    return 0


def _cmd_find_partition(args: argparse.Namespace) -> int:
    g = from_graph6(_read_graph_text(args.graph))
    p, trace = lower.fat_partition_with_trace(g)
    payload = {
        "partition": p.to_text(),
        "parts": p.part_count,
        "min_part_size": min((len(b) for b in p.blocks), default=0),
        "improvement_steps": len(trace) - 1,
    }
    _emit(payload, args.out)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    report = run_suite(args.suite, args.nmax, args.seeds)
    _emit(report.to_json(), args.out)
    counts = report.counts()
    sys.stderr.write(
        f"suite {args.suite}: {counts['pass']} pass, {counts['fail']} fail, "
        f"{counts['info']} info\n"
    )
    return 0 if report.passed else 1


def _cmd_conjecture(args: argparse.Namespace) -> int:
    report = conjecture_search(args.nmax)
    _emit(report.to_json(), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bellgraphs",
        description="Bell colouring graphs: construction, reconstruction, verification",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="materialize a Bell-type graph")
    p.add_argument("--graph", required=True, help="host graph (graph6 string or file)")
    p.add_argument("--variant", choices=("full", "atmost", "atleast"), default="full")
    p.add_argument("--k", type=int, default=None, help="part bound for bounded variants")
    p.add_argument("--cap", type=int, default=500_000)
    p.add_argument("--out", default=None, help="JSON output path (default stdout)")
    p.add_argument("--dot", default=None, help="also write DOT here")
    p.add_argument("--graph6-out", default=None, help="also write the unlabeled graph6 here")
    p.set_defaults(func=_cmd_build)

    p = sub.add_parser("reconstruct", help="recover a host graph from an unlabeled input")
    p.add_argument("--mode", choices=("full", "upper-auto", "lower"), required=True)
    p.add_argument("--input", required=True, help="unlabeled graph (graph6 string or file)")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_reconstruct)

    p = sub.add_parser("classify", help="decide equivalence of two (graph, k) pairs")
    p.add_argument("--g1", required=True)
    p.add_argument("--k1", type=int, required=True)
    p.add_argument("--g2", required=True)
    p.add_argument("--k2", type=int, required=True)
    p.add_argument("--oracle", action="store_true", help="also run the direct oracle")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("find-partition", help="partition into chi parts of size >= 4")
    p.add_argument("--graph", required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_find_partition)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=SUITE_NAMES, required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--seeds", type=int, default=1)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("conjecture", help="sweep bounded-variant pairs against the predicate")
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_conjecture)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
