"""Command-line entry point: ``chirality classify|verify|enumerate|minors|zoo|emit``.

Exit codes: 0 success / claims hold, 1 claim mismatch, 2 input error,
3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from ..canon import DEFAULT_MAX_ORDER, GroupTooLarge, canonical_form
from ..chirality import Status, classify
from ..enumeration import BudgetExceeded, GenSpec, generate
from ..graph import ZOO_NAMES, GraphDomainError, GraphInputError, MultiGraph, decode, to_graph6, to_json, zoo
from ..minors import MinorBudgetExceeded, all_proper_minors
from ..planarity import planar
from .report import classify_report, dump_report
from .scene import emit_mirror_embedding
from .theorems import CHECKS, classify_many, run_check

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


def _odd(text: str) -> int:
    n = int(text)
    if n < 3 or n % 2 == 0:
        raise argparse.ArgumentTypeError("must be an odd integer >= 3")
    return n


def _read_graph(args) -> MultiGraph:
    if args.zoo:
        return zoo(args.zoo)
    if args.graph6:
        return decode(args.graph6, "graph6")
    if not args.input:
        raise GraphInputError("give an input path, --zoo NAME or --graph6 STRING")
    text = sys.stdin.read() if args.input == "-" else open(args.input, encoding="utf-8").read()
    fmt = args.format
    if fmt == "auto":
        fmt = "json" if text.lstrip().startswith("{") else "graph6"
    return decode(text, fmt)


def _add_input(p: argparse.ArgumentParser):
    p.add_argument("input", nargs="?", help="graph file (graph6 or json), '-' for stdin")
    p.add_argument("--zoo", help=f"named graph: {', '.join(ZOO_NAMES)}")
    p.add_argument("--graph6", help="graph6 string given inline")
    p.add_argument("--format", choices=["auto", "graph6", "json"], default="auto")


def _add_caps(p: argparse.ArgumentParser):
    p.add_argument("--max-aut-order", type=int, default=DEFAULT_MAX_ORDER)
    p.add_argument("--max-ladder", type=_odd, default=3, help="largest odd Moebius ladder to search")
    p.add_argument("--jobs", type=int, default=1)


def cmd_classify(args) -> int:
    g = _read_graph(args)
    print(dump_report(classify_report(g, max_n=args.max_ladder, max_order=args.max_aut_order)))
    return EXIT_OK


def cmd_verify(args) -> int:
    names = list(CHECKS) if args.theorem == "all" else [args.theorem]
    ok = True
    results = []
    for name in names:
        check = run_check(name, jobs=args.jobs)
        ok &= check.passed
        results.append(check)
        if not args.json:
            print("\n".join(check.lines()))
    if args.json:
        print(json.dumps([c.to_json() for c in results], indent=2))
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_enumerate(args) -> int:
    filters = set()
    if args.nonplanar:
        filters.add("nonplanar")
    if args.planar:
        filters.add("planar")
    if args.triangle_free:
        filters.add("triangle_free")
    spec = GenSpec(
        max_vertices=args.max_vertices,
        max_edges=args.max_edges,
        min_vertices=args.min_vertices,
        min_edges=args.min_edges,
        min_degree=args.min_degree,
        connected=not args.disconnected,
        simple_only=not args.multigraphs,
        filters=frozenset(filters),
    )
    count = 0
    for g in generate(spec):
        print(to_graph6(g) if g.is_simple and not args.multigraphs else to_json(g))
        count += 1
    print(f"# {count} graphs", file=sys.stderr)
    return EXIT_OK


def cmd_minors(args) -> int:
    g = _read_graph(args)
    minors = list(all_proper_minors(g).values())
    verdicts = classify_many(minors, args.jobs) if args.classify_all else [None] * len(minors)
    rows = []
    for h, v in zip(minors, verdicts):
        row = {
            "n": h.n,
            "edges": h.edge_count,
            "simple": h.is_simple,
            "planar": planar(h),
            "canonical_form": canonical_form(h).decode("ascii"),
        }
        if v is not None:
            row["verdict"] = v.status.value
        rows.append(row)
    if args.json:
        print(json.dumps(rows, indent=2))
    else:
        print(f"{'n':>3} {'m':>3} {'simple':>6} {'planar':>6} {'verdict':>20}  canonical form")
        for r in rows:
            print(f"{r['n']:>3} {r['edges']:>3} {str(r['simple']):>6} {str(r['planar']):>6} {r.get('verdict', '-'):>20}  {r['canonical_form']}")
        print(f"# {len(rows)} proper minors", file=sys.stderr)
    if args.classify_all and any(v.status is not Status.ACHIRAL for v in verdicts):
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_zoo(args) -> int:
    if not args.name:
        print("\n".join(ZOO_NAMES))
        return EXIT_OK
    g = zoo(args.name)
    print(to_graph6(g) if args.format == "graph6" else to_json(g))
    return EXIT_OK


def cmd_emit(args) -> int:
    g = _read_graph(args)
    v = classify(g, max_n=args.max_ladder, max_order=args.max_aut_order)
    if v.mirror is None:
        print(f"no mirror certificate: verdict is {v.status.value}", file=sys.stderr)
        return EXIT_MISMATCH
    print(json.dumps(emit_mirror_embedding(g, v.mirror), indent=2))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chirality", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify one graph and print a json report")
    _add_input(p)
    _add_caps(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="re-derive a classification result by exhaustive computation")
    p.add_argument("theorem", choices=[*CHECKS, "all"])
    p.add_argument("--json", action="store_true")
    _add_caps(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="stream graphs as graph6 (json lines for multigraphs)")
    p.add_argument("--max-vertices", type=int, required=True)
    p.add_argument("--max-edges", type=int, required=True)
    p.add_argument("--min-vertices", type=int, default=1)
    p.add_argument("--min-edges", type=int, default=0)
    p.add_argument("--min-degree", type=int)
    p.add_argument("--disconnected", action="store_true", help="include disconnected graphs")
    p.add_argument("--multigraphs", action="store_true")
    p.add_argument("--nonplanar", action="store_true")
    p.add_argument("--planar", action="store_true")
    p.add_argument("--triangle-free", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("minors", help="table of proper minors up to isomorphism")
    _add_input(p)
    _add_caps(p)
    p.add_argument("--classify-all", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_minors)

    p = sub.add_parser("zoo", help="list named graphs or print one")
    p.add_argument("name", nargs="?")
    p.add_argument("--format", choices=["graph6", "json"], default="json")
    p.set_defaults(func=cmd_zoo)

    p = sub.add_parser("emit", help="3-D coordinates of a mirror-symmetric embedding")
    _add_input(p)
    _add_caps(p)
    p.set_defaults(func=cmd_emit)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphInputError, GraphDomainError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (GroupTooLarge, BudgetExceeded, MinorBudgetExceeded) as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
