"""Command-line front end.

Exit codes: 0 valid/SAT/pass, 1 invalid/UNSAT/fail, 2 usage or I/O error,
3 search stopped by its budget.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bounds import audit, tiassl_bounds
from .construct import construct_tiass_graph
from .errors import SumLabelError
from .formats import dumps_labeled_graph, loads_labeled_graph, to_dot
from .labeling import LabelClass, classify
from .search import (
    DEFAULT_BUDGET,
    Status,
    decide,
    verify_no_connected_tiassi,
    verify_star_theorem,
    verify_tiasgl_implies_tiassl,
)
from .setalg import GroundSet, compute_structural_sets, format_set, parse_set, sumset
from .topology import enumerate_topologies

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _family(x: GroundSet, masks) -> list[str]:
    return [format_set(x.from_mask(m), braces=True) for m in masks]


def cmd_sumset(args) -> int:
    print(format_set(sumset(parse_set(args.a), parse_set(args.b))))
    return EXIT_OK


def cmd_sets(args) -> int:
    x = GroundSet.parse(args.ground)
    s = compute_structural_sets(x)
    if args.json:
        doc = {name: [sorted(x.from_mask(m)) for m in getattr(s, name)] for name in ("A", "B", "D", "Aprime")}
        doc.update(rho=s.rho, rho_prime=s.rho_prime, rho_double_prime=s.rho_double_prime)
        print(json.dumps(doc))
        return EXIT_OK
    print(f"A  (rho   = {s.rho}): {' '.join(_family(x, s.A))}")
    print(f"B  (rho'  = {s.rho_prime}): {' '.join(_family(x, s.B))}")
    print(f"D  (rho'' = {s.rho_double_prime}): {' '.join(_family(x, s.D))}")
    print(f"A' ({len(s.Aprime)}): {' '.join(_family(x, s.Aprime))}")
    return EXIT_OK


def cmd_bounds(args) -> int:
    report = tiassl_bounds(GroundSet.parse(args.ground))
    print(json.dumps(report.as_dict()) if args.json else report.render())
    return EXIT_OK


def cmd_topologies(args) -> int:
    x = GroundSet.parse(args.ground)
    required = [parse_set(r) for r in args.require or []]
    count = 0
    for t in enumerate_topologies(x, required):
        count += 1
        if not args.count:
            print(" ".join(format_set(s, braces=True) for s in t))
    if args.count:
        print(count)
    return EXIT_OK


def _read(path: str) -> str:
    return sys.stdin.read() if path == "-" else Path(path).read_text()


def cmd_analyze(args) -> int:
    x, g, l = loads_labeled_graph(_read(args.file))
    if l is None:
        raise SumLabelError("analyze needs a labeled graph (every vertex with a label)")
    strict = not args.lenient
    report = classify(g, l, strict_tiassl=strict)
    result = audit(g, l, tiassl_bounds(x), strict_tiassl=strict)
    ok = report[LabelClass.TIASSL].passed and result.passed and not result.vacuous
    if args.json:
        print(json.dumps({"classification": report.as_dict(), "audit": result.as_dict(), "ok": ok}))
    else:
        print(report.render())
        print(result.render())
    return EXIT_OK if ok else EXIT_FAIL


def cmd_construct(args) -> int:
    x = GroundSet.parse(args.ground)
    g, l = construct_tiass_graph(x)
    doc = dumps_labeled_graph(x, g, l)
    if args.out:
        Path(args.out).write_text(doc)
    else:
        sys.stdout.write(doc)
    if args.dot:
        Path(args.dot).write_text(to_dot(g, l))
    return EXIT_OK


def cmd_decide(args) -> int:
    x, g, _ = loads_labeled_graph(_read(args.file))
    cls = LabelClass.parse(args.label_class)
    budget = None if args.budget < 0 else args.budget
    out = decide(g, x, cls, strict=not args.lenient, budget=budget)
    if args.json:
        print(json.dumps(out.as_dict()))
    else:
        print(f"{cls.value}: {out.status.value} ({out.nodes} nodes, {out.seconds:.3f}s, {out.backend})")
        if out.witness is not None:
            sys.stdout.write(dumps_labeled_graph(x, g, out.witness))
    if out.witness is not None and args.dot:
        Path(args.dot).write_text(to_dot(g, out.witness))
    if out.status is Status.SAT:
        return EXIT_OK
    if out.status is Status.INCONCLUSIVE:
        return EXIT_BUDGET
    return EXIT_FAIL


def cmd_verify(args) -> int:
    x = GroundSet.parse(args.ground)
    if len(x) > 3:
        raise SumLabelError("verify-theorems supports ground sets with at most 3 elements")
    reports = [
        verify_star_theorem(x),
        verify_no_connected_tiassi(args.max_n, x),
        verify_tiasgl_implies_tiassl(x),
    ]
    if args.json:
        print(json.dumps([r.as_dict() for r in reports]))
    else:
        for r in reports:
            print(r.render())
    if any(n.startswith("budget") for r in reports for n in r.notes):
        return EXIT_BUDGET
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="sumlabel", description="Topological integer additive set-sequential labelings.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("sumset", help="sumset of two sets, e.g. 0,1 0,2")
    s.add_argument("a")
    s.add_argument("b")
    s.set_defaults(func=cmd_sumset)

    s = sub.add_parser("sets", help="structural families A, B, D, A' of a ground set")
    s.add_argument("ground")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_sets)

    s = sub.add_parser("bounds", help="TIASSL/TIASSI bounds of a ground set")
    s.add_argument("ground")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_bounds)

    s = sub.add_parser("topologies", help="enumerate topologies on a ground set")
    s.add_argument("ground")
    s.add_argument("--require", action="append", metavar="SET")
    s.add_argument("--count", action="store_true", help="print only the number of topologies")
    s.set_defaults(func=cmd_topologies)

    s = sub.add_parser("analyze", help="classify a labeled graph and audit it against the bounds")
    s.add_argument("file")
    s.add_argument("--lenient", action="store_true", help="TIASSL without the IASI requirement")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("construct", help="build a TIASS-graph for a ground set")
    s.add_argument("ground")
    s.add_argument("--dot", metavar="PATH")
    s.add_argument("--out", metavar="PATH")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("decide", help="search for a labeling of a given class")
    s.add_argument("file")
    s.add_argument("--class", dest="label_class", required=True)
    s.add_argument("--lenient", action="store_true")
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="node budget, negative for none")
    s.add_argument("--dot", metavar="PATH")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_decide)

    s = sub.add_parser("verify-theorems", help="exhaustive checks of the structural theorems")
    s.add_argument("ground")
    s.add_argument("--max-n", type=int, default=5)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_verify)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (SumLabelError, OSError) as exc:
        print(f"sumlabel: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
