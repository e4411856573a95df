"""Command line entry point: analyze, theorem, lemmas, girth, cover.

Exit codes: 0 when every check passes, 1 when a checked claim fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import harness
from .cover import default_half_width, ends_separated, ladder_window, path_window, verify_covering_window
from .groups import GensetError, GroupError, SpecError

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _emit(report: dict, path: Optional[str]) -> None:
    text = harness.canonical_json(report)
    if path:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _summary(line: str, path: Optional[str]) -> None:
    # keep stdout pure JSON when no file was requested
    print(line, file=sys.stderr if path is None else sys.stdout)


def cmd_analyze(args) -> int:
    report = harness.analyze(args.group, args.genset, args.r, crossing=not args.no_crossing)
    _emit(report, args.json)
    return EXIT_OK


def cmd_theorem(args) -> int:
    corpus = harness.load_corpus(args.corpus) if args.corpus else None
    report = harness.run_theorem_corpus(corpus, args.r, args.max_pairs, workers=args.workers,
                                        windows=not args.no_windows)
    problems = harness.verify_report(report)
    report["witness_problems"] = problems
    _emit(report, args.json)
    s = report["summary"]
    _summary(f"entries={s['entries']} agree={s['agree']} inconclusive={s['inconclusive']} "
             f"counterexamples={s['counterexamples']} window_failures={s['window_failures']}", args.json)
    return EXIT_OK if s["passed"] and not problems else EXIT_FAIL


def cmd_lemmas(args) -> int:
    report = harness.run_lemma_suite(args.scope, args.n_max, args.seed, args.samples)
    _emit(report, args.json)
    _summary(f"lemma suite: {'pass' if report['passed'] else 'FAIL'}", args.json)
    return EXIT_OK if report["passed"] else EXIT_FAIL


def cmd_girth(args) -> int:
    report = {"kind": "girth"}
    if args.a5:
        report["a5_presentation"] = harness.a5_cutvertex_check(args.r).as_dict()
    else:
        report["search"] = harness.girth_search(args.r, args.n_max, args.trials, args.seed)
    _emit(report, args.json)
    if "search" in report:
        res = report["search"]
        return EXIT_FAIL if res["found"] and not res["every_vertex_local_cutvertex"] else EXIT_OK
    return EXIT_OK if report["a5_presentation"]["status"] != "fail" else EXIT_FAIL


def cmd_cover(args) -> int:
    L = args.L if args.L is not None else default_half_width(args.n, args.r)
    W = path_window(args.n, L) if args.family == "path" else ladder_window(args.n, L)
    check = verify_covering_window(W, r=args.r)
    sep = ends_separated(W, 1 if args.family == "path" else 2, args.r)
    report = {"kind": "cover", "family": args.family, "n": args.n, "L": L, "r": args.r,
              "verification": check.as_dict(),
              "ends_separator": None if sep is None else [W.graph.names[v] for v in sep]}
    if args.export:
        report["window"] = W.to_json(args.r)
    _emit(report, args.json)
    return EXIT_OK if check.passed and sep is not None else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="locsep", description="Local separators in Cayley graphs of finite groups.")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="separator, traversal and crossing analysis of one Cayley graph")
    a.add_argument("group", help='group spec, e.g. "product:cyclic:12,cyclic:2"')
    a.add_argument("--genset", default="standard", help='"standard", "explicit:[...]", "presentation"')
    a.add_argument("--r", type=int, required=True)
    a.add_argument("--no-crossing", action="store_true", help="skip the nestedness computation")
    a.add_argument("--json", metavar="PATH")
    a.set_defaults(func=cmd_analyze)

    t = sub.add_parser("theorem", help="statements (ii) and (iii) over a group corpus")
    t.add_argument("--corpus", metavar="FILE", help="JSON array of {spec, genset, r}")
    t.add_argument("--r", type=int, default=None, help="override every entry's r (default 20)")
    t.add_argument("--max-pairs", type=int, default=None, help="override k in all-pairs:k")
    t.add_argument("--workers", type=int, default=1)
    t.add_argument("--no-windows", action="store_true")
    t.add_argument("--json", metavar="PATH")
    t.set_defaults(func=cmd_theorem)

    lm = sub.add_parser("lemmas", help="word-level and instance-level lemma checks")
    lm.add_argument("--scope", choices=["all", "words", "instances"], default="all")
    lm.add_argument("--n-max", type=int, default=6)
    lm.add_argument("--samples", type=int, default=500, help="sampled walks per separation")
    lm.add_argument("--seed", type=int, default=0)
    lm.add_argument("--json", metavar="PATH")
    lm.set_defaults(func=cmd_lemmas)

    g = sub.add_parser("girth", help="alternating-group generators of large girth")
    g.add_argument("--r", type=int, required=True)
    g.add_argument("--n-max", type=int, default=7)
    g.add_argument("--trials", type=int, default=200)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--a5", action="store_true", help="check the A_5 presentation generators instead")
    g.add_argument("--json", metavar="PATH")
    g.set_defaults(func=cmd_girth)

    c = sub.add_parser("cover", help="build and verify a covering window")
    c.add_argument("family", choices=["path", "ladder"])
    c.add_argument("--n", type=int, required=True, help="cycle or ring length")
    c.add_argument("--r", type=int, required=True)
    c.add_argument("--L", type=int, default=None, help="half-width (default 3 * max(n, r))")
    c.add_argument("--export", action="store_true", help="include the window graph in the JSON")
    c.add_argument("--json", metavar="PATH")
    c.set_defaults(func=cmd_cover)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except (SpecError, GensetError, GroupError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
