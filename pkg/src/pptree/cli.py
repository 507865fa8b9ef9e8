"""Command-line front end.

Records are JSON objects (one per line when several are emitted) or CSV.
Integers are written as decimal strings so consumers with 53-bit numbers
don't truncate them; floats are strings with 17 significant digits.
CSV fields come from [0-9A-C/,.-] and are never quoted.

Exit codes: 0 success, 1 verification failure, 2 usage or validation error.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from fractions import Fraction
from typing import Iterable, Sequence

from .berggren import LETTERS, InvalidPath, descend_path, enumerate_tree, enumerate_tree_parallel, parse_path, path_of
from .descendant_geometry import DescTriangleMetrics, descendant_triangle_metrics
from .inradius_enum import count_with_inradius, enumerate_with_inradius
from .ppt_core import PPT, TripleError, circumradius, inradius, validate_triple
from .radius_sequences import chain_point
from .verify import Bounds, run_all

FORMAT_ENV = "PPTREE_FORMAT"
CSV_COLUMNS = ["x", "y", "z", "path", "r", "R"]


class UsageError(Exception):
    pass


def fmt_fraction(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def fmt_float(f: float) -> str:
    return format(f, ".17g")


def geometry_block(m: DescTriangleMetrics) -> dict:
    p, D = m.inradius_exact
    return {
        "points": [[str(c) for c in pt] for pt in m.points],
        "plane": [str(m.plane.alpha), str(m.plane.beta), str(m.plane.gamma), str(m.plane.delta)],
        "area": {"coeff": str(m.area.coeff), "radicand": str(m.area.radicand)},
        "sides": {"u": str(m.sides[0]), "w": str(m.sides[1]), "v": {"coeff": "2", "radicand": str(D)}},
        "D": str(D),
        "dot_products": [str(d) for d in m.dot_products],
        "r_exact": {"p": str(p), "D": str(D), "form": "(p - sqrt(D)) / sqrt(17)"},
        "R_squared": fmt_fraction(m.circumradius_sq),
        "r_float": fmt_float(m.inradius_float),
        "R_float": fmt_float(m.circumradius_float),
    }


def triple_record(t: PPT, path: str | None = None, geometry: bool = False) -> dict:
    rec = {
        "x": str(t.x),
        "y": str(t.y),
        "z": str(t.z),
        "path": path,
        "r": str(inradius(t)),
        "R": fmt_fraction(circumradius(t)),
    }
    if geometry:
        rec["geometry"] = geometry_block(descendant_triangle_metrics(t))
    return rec


def parse_triple(text: str) -> PPT:
    try:
        x, y, z = (int(part) for part in text.split(","))
    except ValueError:
        raise UsageError(f"expected a triple 'x,y,z', got {text!r}") from None
    t, swapped = validate_triple(x, y, z)
    if swapped:
        print(f"note: legs reordered to {t.x},{t.y},{t.z}", file=sys.stderr)
    return t


def emit(records: Iterable[dict], fmt: str, out=None) -> None:
    out = out or sys.stdout
    if fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for rec in records:
            writer.writerow(["" if rec[c] is None else rec[c] for c in CSV_COLUMNS])
    else:
        for rec in records:
            out.write(json.dumps(rec) + "\n")


def cmd_descend(args: argparse.Namespace) -> int:
    start = parse_triple(args.triple)
    word = parse_path(args.path)
    t = descend_path(word, start)
    emit([triple_record(t, path_of(start) + word, args.geometry)], "json")
    return 0


def cmd_locate(args: argparse.Namespace) -> int:
    print(path_of(parse_triple(args.triple)))
    return 0


def cmd_enumerate(args: argparse.Namespace) -> int:
    if args.max_z < 5:
        raise UsageError("--max-z must be at least 5")
    if args.workers > 1:
        nodes: Iterable = enumerate_tree_parallel(args.max_z, args.workers)
    else:
        nodes = enumerate_tree(args.max_z)
    emit((triple_record(t, path) for path, t in nodes), args.format)
    return 0


def cmd_inradius(args: argparse.Namespace) -> int:
    if args.r < 1:
        raise UsageError("--r must be at least 1")
    if args.count_only:
        print(count_with_inradius(args.r))
        return 0
    emit((triple_record(t) for t in enumerate_with_inradius(args.r)), args.format)
    return 0


def cmd_chain(args: argparse.Namespace) -> int:
    if args.n < 0:
        raise UsageError("--n must be non-negative")
    cp = chain_point(args.letter, args.n)
    rec = {"letter": cp.letter, "n": str(cp.n)}
    rec.update(triple_record(cp.triple, cp.letter * cp.n))
    emit([rec], "json")
    return 0


def cmd_geometry(args: argparse.Namespace) -> int:
    t = parse_triple(args.triple)
    emit([triple_record(t, path_of(t), geometry=True)], "json")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    bounds = Bounds(
        max_z=args.max_z,
        max_n=args.max_n,
        max_r=args.max_r,
        samples=args.samples,
        max_depth=args.max_depth,
        seed=args.seed,
    )
    results = run_all(bounds, args.workers)
    for res in results:
        print(res.line())
    failed = [res for res in results if not res.passed]
    print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    default_fmt = os.environ.get(FORMAT_ENV, "json")
    if default_fmt not in ("json", "csv"):
        default_fmt = "json"

    parser = argparse.ArgumentParser(prog="pptree", description="Berggren tree of primitive Pythagorean triples")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("descend", help="apply a path over {A,B,C} to a triple")
    p.add_argument("--triple", default="3,4,5")
    p.add_argument("--path", default="")
    p.add_argument("--geometry", action="store_true", help="include the descendant-triangle block")
    p.set_defaults(func=cmd_descend)

    p = sub.add_parser("locate", help="path from (3,4,5) to a triple")
    p.add_argument("--triple", required=True)
    p.set_defaults(func=cmd_locate)

    p = sub.add_parser("enumerate", help="all tree nodes with hypotenuse <= N, breadth first")
    p.add_argument("--max-z", type=int, required=True)
    p.add_argument("--format", choices=["json", "csv"], default=default_fmt)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("inradius", help="all triples with a given inradius")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--format", choices=["json", "csv"], default=default_fmt)
    p.set_defaults(func=cmd_inradius)

    p = sub.add_parser("chain", help="L^n (3,4,5) with its radii")
    p.add_argument("--letter", choices=list(LETTERS), required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_chain)

    p = sub.add_parser("geometry", help="triangle formed by the three children of a triple")
    p.add_argument("--triple", required=True)
    p.set_defaults(func=cmd_geometry)

    p = sub.add_parser("verify", help="check every formula against brute force")
    p.add_argument("--max-z", type=int, default=10_000)
    p.add_argument("--max-n", type=int, default=30)
    p.add_argument("--max-r", type=int, default=500)
    p.add_argument("--samples", type=int, default=10_000, help="random paths for the round-trip check")
    p.add_argument("--max-depth", type=int, default=25)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (TripleError, InvalidPath, UsageError) as exc:
        print(f"pptree {args.command}: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        # downstream closed early (e.g. piped into head)
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return 0


if __name__ == "__main__":
    sys.exit(main())
