"""Command-line interface.

Shapes and diagrams are given inline with ``/`` between rows (``"##/#."``,
``"110/01"``), as a file path, or as ``-`` for stdin; shapes also accept a
partition such as ``6,6,5,4,3``.  Exit status: 0 success, 1 a check failed,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from dataclasses import asdict
from typing import Sequence

from . import bijection
from ._kernels import BACKEND
from .census import StirlingMismatch, f_polynomial, stirling_table
from .filling import PatternClass, count_by_ones, find_violation, parse_filling, render_filling
from .graph import chromatic_polynomial, count_acyclic_orientations, graph_from_shape
from .shape import Shape, classify, parse_partition, parse_shape, young_shape

_PARTITION = re.compile(r"^\s*\(?\d+(\s*,\s*\d+)*\)?\s*$")

MAPS = {
    "phi": bijection.phi,
    "phi-inv": bijection.phi_inv,
    "big-phi": bijection.Phi,
    "big-phi-inv": bijection.Phi_inv,
    "phi2": bijection.phi2,
    "phi2-inv": bijection.phi2_inv,
    "big-phi2": bijection.Phi2,
    "big-phi2-inv": bijection.Phi2_inv,
}


class UsageError(Exception):
    pass


def _text(arg: str) -> str:
    if arg == "-":
        return sys.stdin.read()
    if os.path.isfile(arg):
        with open(arg, encoding="utf-8") as fh:
            return fh.read()
    return arg.replace("/", "\n")


def _shape(arg: str) -> Shape:
    if _PARTITION.match(arg) and not os.path.isfile(arg):
        return young_shape(parse_partition(arg))
    return parse_shape(_text(arg))


def _pair(arg: str) -> tuple[int, int]:
    try:
        a, b = (int(x) for x in arg.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected two integers 'a,b', got {arg!r}") from None
    if a < 0 or b < 0:
        raise argparse.ArgumentTypeError("box dimensions must be nonnegative")
    return a, b


def _emit(args, payload: dict, tsv_rows: list[Sequence]) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=False))
    else:
        for row in tsv_rows:
            print("\t".join(str(x) for x in row))


def cmd_classify(args) -> int:
    info = asdict(classify(_shape(args.shape)))
    _emit(args, info, [(k, str(v).lower()) for k, v in info.items()])
    return 0


def cmd_check(args) -> int:
    f = parse_filling(_text(args.diagram))
    v = find_violation(f, PatternClass.parse(args.cls))
    if v is None:
        _emit(args, {"ok": True}, [("OK",)])
        return 0
    _emit(args, {"ok": False, "r1": v.r1, "r2": v.r2, "c1": v.c1, "c2": v.c2, "pattern": str(v.pattern)},
          [("VIOLATION", v.r1, v.r2, v.c1, v.c2, v.pattern)])
    return 1


def cmd_map(args) -> int:
    f = parse_filling(_text(args.diagram))
    out = MAPS[args.bijection](f)
    if args.format == "json":
        print(json.dumps({"rows": render_filling(out).split("\n")}))
    else:
        print(render_filling(out))
    return 0


def cmd_count(args) -> int:
    poly = count_by_ones(_shape(args.shape), PatternClass.parse(args.cls))
    if args.by_ones:
        coeffs = poly.to_list()
        _emit(args, {"coefficients": coeffs}, [(j, a) for j, a in enumerate(coeffs)])
    else:
        _emit(args, {"count": poly(1)}, [(poly(1),)])
    return 0


def cmd_fpoly(args) -> int:
    p = parse_partition(args.partition)
    poly = f_polynomial(p)
    payload = {"partition": list(p), "coefficients": poly.to_list()}
    rows = [(j, a) for j, a in enumerate(poly.to_list())]
    status = 0
    if args.verify:
        brute = count_by_ones(young_shape(p), PatternClass.LE)
        payload["verified"] = brute == poly
        rows.append(("verify", "match" if brute == poly else f"MISMATCH {brute.to_list()}"))
        status = 0 if brute == poly else 1
    _emit(args, payload, rows)
    return status


def _graph(args):
    p = parse_partition(args.partition)
    return graph_from_shape(p, args.box)


def cmd_chromatic(args) -> int:
    coeffs = chromatic_polynomial(_graph(args)).to_list()
    _emit(args, {"coefficients": coeffs}, [(j, a) for j, a in enumerate(coeffs)])
    return 0


def cmd_ao(args) -> int:
    try:
        n = count_acyclic_orientations(_graph(args))
    except AssertionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _emit(args, {"acyclic_orientations": n}, [(n,)])
    return 0


def cmd_stirling(args) -> int:
    try:
        t = stirling_table(args.n, check=False)
    except StirlingMismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    rows = [("k", "x_count", "le_count", "c(n,k)", "status")]
    for k in sorted(t.expected):
        ok = t.rows[k] == t.le_rows[k] == t.le_direct[k] == t.expected[k]
        rows.append((k, t.rows[k], t.le_rows[k], t.expected[k], "match" if ok else "MISMATCH"))
    payload = {"n": t.n, "rows": t.rows, "le_rows": t.le_rows, "le_direct": t.le_direct,
               "expected": t.expected, "total": t.total}
    _emit(args, payload, rows)
    return 0 if t.matches() else 1


def cmd_verify(args) -> int:
    from .verify import run_all

    results = run_all(args.max_cells, args.le_complete_box)
    failed = [r for r in results if not r.ok]
    if args.format == "json":
        print(json.dumps([{"name": r.name, "checked": r.checked, "ok": r.ok, "witness": r.witness}
                          for r in results]))
    else:
        for r in failed:
            print(f"FAIL\t{r.name}\t{r.witness}")
        print(f"{len(results) - len(failed)}/{len(results)} properties passed (backend: {BACKEND})")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("tsv", "json"), default="tsv")

    parser = argparse.ArgumentParser(prog="lediagrams", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="classify a shape")
    p.add_argument("shape")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("check", parents=[common], help="test pattern avoidance")
    p.add_argument("diagram")
    p.add_argument("--class", dest="cls", choices=("le", "x", "alt"), required=True)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("map", parents=[common], help="apply a bijection")
    p.add_argument("diagram")
    p.add_argument("--bijection", choices=sorted(MAPS), required=True)
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("count", parents=[common], help="count avoiding fillings")
    p.add_argument("--shape", required=True)
    p.add_argument("--class", dest="cls", choices=("le", "x", "alt"), required=True)
    p.add_argument("--by-ones", action="store_true")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("fpoly", parents=[common], help="Le-diagram polynomial by recurrence")
    p.add_argument("partition")
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_fpoly)

    for name, func, text in (("chromatic", cmd_chromatic, "chromatic polynomial"),
                             ("ao", cmd_ao, "acyclic orientations")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("partition")
        p.add_argument("--box", type=_pair, default=None)
        p.set_defaults(func=func)

    p = sub.add_parser("stirling", parents=[common], help="permutation tableaux census")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_stirling)

    p = sub.add_parser("verify", parents=[common], help="run the invariant suite")
    p.add_argument("--max-cells", type=int, default=12)
    p.add_argument("--le-complete-box", type=_pair, default=(4, 4))
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ValueError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


run = main

if __name__ == "__main__":
    sys.exit(main())
