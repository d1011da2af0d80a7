"""Command line: gen, check, sat, verify, lemmas.

Exit status: 0 on success, 1 when a requested property fails (or a verdict is
not MATCH), 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import TextIO

from .detect import parse_target
from .families import FAMILIES, FamilyParamError, enumerate_family
from .formats import Graph6ParseError, graph6_encode, read_graph6, to_dot
from .graph import MAX_VERTICES
from .saturation import invariant_report, is_saturated
from .search import NO_PRUNE, PruneOptions, search_min_saturated
from .verify import MATCH, verify_n

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _open_input(path: str | None) -> TextIO:
    if path in (None, "-"):
        return sys.stdin
    try:
        return open(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def _target(name: str):
    try:
        return parse_target(name)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _prune(args: argparse.Namespace) -> PruneOptions:
    if args.threads < 1:
        raise UsageError("--threads must be at least 1")
    if args.edge_cap is not None and args.edge_cap < 0:
        raise UsageError("--edge-cap must be non-negative")
    return NO_PRUNE if args.no_prune else PruneOptions()


def cmd_gen(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    if args.family.lower() not in FAMILIES:
        raise UsageError(f"unknown family {args.family!r}; expected one of {', '.join(FAMILIES)}")
    if not 1 <= args.n <= MAX_VERTICES:
        raise UsageError(f"n must be in 1..{MAX_VERTICES}")
    try:
        classes = enumerate_family(args.family, args.n)
    except FamilyParamError as exc:
        raise UsageError(str(exc)) from exc
    if not classes:
        err.write(f"note: family {args.family} is empty at n={args.n}\n")
        return EXIT_OK
    if not args.all:
        classes = classes[:1]
    for i, (_, g) in enumerate(classes):
        if args.format == "dot":
            out.write(to_dot(g, f"{args.family}_{args.n}_{i}") + "\n")
        else:
            out.write(graph6_encode(g) + "\n")
    return EXIT_OK


def cmd_check(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    target = _target(args.target)
    stream = _open_input(args.input)
    ok = True
    try:
        for lineno, g in read_graph6(stream):
            free = not target.contained_in(g)
            saturated = free and is_saturated(g, target)
            row = {
                "line": lineno,
                "graph6": graph6_encode(g),
                "edges": g.num_edges,
                "free": free,
                "saturated": saturated,
            }
            if args.lemmas:
                row["lemmas"] = invariant_report(g)
            if args.saturated and not saturated:
                ok = False
            if args.free and not free:
                ok = False
            if args.json:
                out.write(json.dumps(row, sort_keys=True) + "\n")
            else:
                flags = [target.name + ("-FREE" if free else "-CONTAINED")]
                if saturated:
                    flags.append("SATURATED")
                text = f"line {lineno}: {row['graph6']} edges={g.num_edges} {' '.join(flags)}"
                if args.lemmas:
                    text += " " + " ".join(f"{k}={'ok' if v else 'FAIL'}" for k, v in row["lemmas"].items())
                out.write(text + "\n")
    except Graph6ParseError as exc:
        err.write(f"{exc}\n")
        return EXIT_USAGE
    return EXIT_OK if ok else EXIT_FAIL


def cmd_lemmas(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    stream = _open_input(args.input)
    ok = True
    try:
        for lineno, g in read_graph6(stream):
            report = invariant_report(g)
            ok &= all(report.values())
            if args.json:
                out.write(json.dumps({"line": lineno, "graph6": graph6_encode(g), **report}, sort_keys=True) + "\n")
            else:
                checks = " ".join(f"{k}={'ok' if v else 'FAIL'}" for k, v in report.items())
                out.write(f"line {lineno}: {graph6_encode(g)} {checks}\n")
    except Graph6ParseError as exc:
        err.write(f"{exc}\n")
        return EXIT_USAGE
    return EXIT_OK if ok else EXIT_FAIL


def cmd_sat(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    target = _target(args.target)
    if not 4 <= args.n <= 12:
        raise UsageError("sat needs 4 <= n <= 12")
    prune = _prune(args)
    report = search_min_saturated(args.n, target, edge_cap=args.edge_cap, prune=prune, workers=args.threads)
    out.write(report.to_json() + "\n")
    if report.status != "ok":
        err.write(f"no saturated graph within edge cap {args.edge_cap}\n")
        return EXIT_FAIL
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    if not 6 <= args.n_from <= args.n_to <= 12:
        raise UsageError("verify needs 6 <= n_from <= n_to <= 12 (n = 5 is covered by `sat W4 5`)")
    prune = _prune(args)
    rows = []
    for n in range(args.n_from, args.n_to + 1):
        outcome = verify_n(n, edge_cap=args.edge_cap, prune=prune, workers=args.threads)
        rows.append(outcome.to_dict())
        err.write(f"n={n}: {outcome.verdict} (sat {outcome.computed_sat}, {outcome.wall_time:.1f}s)\n")
    out.write(json.dumps(rows, sort_keys=True, indent=1) + "\n")
    return EXIT_OK if all(r["verdict"] == MATCH for r in rows) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wheelsat", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="emit members of a named family")
    p.add_argument("family", help=", ".join(FAMILIES))
    p.add_argument("n", type=int)
    p.add_argument("--all", action="store_true", help="every isomorphism class, not just one")
    p.add_argument("--format", choices=("graph6", "dot"), default="graph6")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("check", help="test graph6 lines for freeness / saturation")
    p.add_argument("input", nargs="?", help="graph6 file (default: stdin)")
    p.add_argument("--target", default="W4")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--saturated", action="store_true")
    mode.add_argument("--free", action="store_true")
    p.add_argument("--lemmas", action="store_true", help="also run the structural invariant checks")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("lemmas", help="structural invariants of W4-saturated graphs")
    p.add_argument("input", nargs="?", help="graph6 file (default: stdin)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_lemmas)

    for name, func, helptext in (
        ("sat", cmd_sat, "exact saturation number by exhaustive search"),
        ("verify", cmd_verify, "compare search with the W4 family description"),
    ):
        p = sub.add_parser(name, help=helptext)
        if name == "sat":
            p.add_argument("target")
            p.add_argument("n", type=int)
        else:
            p.add_argument("n_from", type=int)
            p.add_argument("n_to", type=int)
        p.add_argument("--edge-cap", type=int, default=None)
        p.add_argument("--threads", type=int, default=1, help="worker processes")
        p.add_argument("--no-prune", action="store_true")
        p.add_argument("--json", action="store_true", help="accepted for symmetry; output is JSON already")
        p.set_defaults(func=func)
    return parser


def main(argv: list[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out, err)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
