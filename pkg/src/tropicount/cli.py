"""Command line front end.

Four subcommands: ``polygon`` reports a dual polygon, ``count-rational`` and
``count-elliptic`` run the counting stacks, ``render`` turns a serialized
curve into an SVG picture.  Counted results go to stdout as versioned JSON
(``"schema": 1``) that is byte-identical across runs with the same command
line and seed; everything volatile (timings, cache traffic, engine build)
rides along on stderr as a one-line run manifest.

Exit codes: 0 success, 2 bad usage or malformed input, 3 structurally
infeasible query (tangency heavier than the bidegree allows).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from tropicount import __version__, _cache
from tropicount._exact import USING_SPEEDUPS
from tropicount import elliptic_formula as ef
from tropicount.polygon_lattice import pick_data, polygon_of_degree
from tropicount.rational_count import CountQuery, count_elliptic_direct, count_rational
from tropicount.tropical_core import TropicalCurve

_INFEASIBLE_MARK = "tangency exceeds bidegree"

# direct genus-1 verification is offered only up to this many ends
_DIRECT_END_BUDGET = 6


@dataclass
class RunManifest:
    """What a run did, for the log: never part of the stable stdout."""

    command: List[str]
    seed: Optional[int]

    def __post_init__(self):
        self.started = time.monotonic()
        _cache.reset_stats()

    def emit(self) -> None:
        hits, misses = _cache.stats()
        payload = {
            "command": self.command,
            "seed": self.seed,
            "version": __version__,
            "kernel": "compiled" if USING_SPEEDUPS else "pure",
            "cache_hits": hits,
            "cache_misses": misses,
            "wall_time_s": round(time.monotonic() - self.started, 4),
        }
        print("manifest " + json.dumps(payload, sort_keys=True), file=sys.stderr)


def _emit_json(data: dict) -> None:
    data["schema"] = 1
    sys.stdout.write(json.dumps(data, sort_keys=True, indent=2) + "\n")


def _parse_tangency(text: Optional[str]):
    if text is None:
        return None
    parts = [p.strip() for p in text.split(",") if p.strip()]
    try:
        weights = [int(p) for p in parts]
    except ValueError:
        raise ValueError(f"cannot parse tangency {text!r}")
    if len(weights) == 1:
        return weights[0]
    if len(weights) == 2:
        return (weights[0], weights[1])
    raise ValueError("tangency takes one or two weights")


def _resolve_degree(args) -> Tuple[int, int, int]:
    """(n, a, b) from either --surface p2 --d or explicit --n/--a/--b."""
    if args.surface is not None:
        if args.d is None:
            raise ValueError("--surface p2 needs --d")
        if args.n is not None or args.a is not None or args.b is not None:
            raise ValueError("give either --surface/--d or --n/--a/--b, not both")
        # the plane embeds as bidegree (d, 0) on the one-point blow-up
        return 1, args.d, 0
    if args.n is None or args.a is None or args.b is None:
        raise ValueError("need --n, --a and --b (or --surface p2 --d)")
    return args.n, args.a, args.b


# -- subcommands ------------------------------------------------------------


def cmd_polygon(args) -> int:
    poly = polygon_of_degree(args.n, args.a, args.b)
    area, boundary, interior = pick_data(poly)
    if args.json:
        _emit_json(
            {
                "vertices": [[x, y] for x, y in poly.vertices],
                "area": f"{area.numerator}/{area.denominator}",
                "boundary_lattice_points": boundary,
                "interior_lattice_points": interior,
            }
        )
    else:
        verts = " ".join(f"({x},{y})" for x, y in poly.vertices)
        print(f"vertices: {verts}")
        print(f"area: {area}")
        print(f"boundary lattice points: {boundary}")
        print(f"interior lattice points: {interior}")
    return 0


def cmd_count_rational(args) -> int:
    n, a, b = _resolve_degree(args)
    tangency = _parse_tangency(args.tangency)
    manifest = RunManifest(command=args.raw_command, seed=args.seed)
    query = CountQuery(surface_n=n, degree=(a, b), tangency=tangency)
    record = count_rational(query, seed=args.seed, use_cache=args.cache)
    if args.quiet:
        print(record.value)
    else:
        tang_json = (
            None
            if tangency is None
            else [tangency] if isinstance(tangency, int) else list(tangency)
        )
        _emit_json(
            {
                "surface_n": n,
                "degree": [a, b],
                "tangency": tang_json,
                "genus": 0,
                "num_points": query.num_points,
                "value": record.value,
            }
        )
    manifest.emit()
    return 0


def cmd_count_elliptic(args) -> int:
    n, a, b = _resolve_degree(args)
    manifest = RunManifest(command=args.raw_command, seed=args.seed)
    provider = ef.CachedCounts(seed=args.seed, use_cache=args.cache)
    result = ef.elliptic_count(n, a, b, counts=provider)
    if args.verify_direct:
        degree = 2 * b + (n + 2) * a
        if degree <= _DIRECT_END_BUDGET:
            direct = count_elliptic_direct(
                n, a, b, j_length=Fraction(999_983, 7), seed=args.seed
            )
            if direct.value != result.total:
                print(
                    "direct enumeration disagrees: "
                    f"{direct.value} != {result.total}",
                    file=sys.stderr,
                )
                return 1
            print(f"direct enumeration agrees: {direct.value}", file=sys.stderr)
        else:
            print(
                f"direct verification skipped: {degree} ends exceeds budget",
                file=sys.stderr,
            )
    if args.quiet:
        print(result.total)
    else:
        data = result.to_json()
        if not args.breakdown:
            del data["terms"]
        _emit_json(data)
    manifest.emit()
    return 0


def cmd_render(args) -> int:
    from tropicount._svgout import render_svg

    try:
        with open(args.curve, "r", encoding="utf-8") as fh:
            data = json.load(fh)
        curve = TropicalCurve.from_json(data)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        print(f"cannot read curve: {exc}", file=sys.stderr)
        return 2
    svg = render_svg(curve)
    out = args.out
    if out is None:
        out = args.curve.rsplit(".", 1)[0] + ".svg"
    with open(out, "w", encoding="utf-8") as fh:
        fh.write(svg)
    print(f"wrote {out}")
    return 0


# -- argument plumbing ------------------------------------------------------


def _add_degree_flags(sub) -> None:
    sub.add_argument("--surface", choices=["p2"], help="named surface shortcut")
    sub.add_argument("--d", type=int, help="plane degree (with --surface p2)")
    sub.add_argument("--n", type=int, help="Hirzebruch parameter")
    sub.add_argument("--a", type=int, help="bidegree: fiber-class coefficient")
    sub.add_argument("--b", type=int, help="bidegree: section-class coefficient")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tropicount",
        description="Exact tropical curve counts on the plane and Hirzebruch surfaces.",
    )
    subs = parser.add_subparsers(dest="subcommand", required=True)

    p_poly = subs.add_parser("polygon", help="report a dual lattice polygon")
    p_poly.add_argument("--n", type=int, required=True)
    p_poly.add_argument("--a", type=int, required=True)
    p_poly.add_argument("--b", type=int, required=True)
    p_poly.add_argument("--json", action="store_true")
    p_poly.set_defaults(func=cmd_polygon)

    p_rat = subs.add_parser("count-rational", help="count rational curves")
    _add_degree_flags(p_rat)
    p_rat.add_argument("--tangency", help="end weight w or pair w1,w2")
    p_rat.add_argument("--seed", type=int, default=0)
    p_rat.add_argument("--cache", action="store_true", help="reuse cached counts")
    p_rat.add_argument("--quiet", action="store_true", help="print the bare integer")
    p_rat.set_defaults(func=cmd_count_rational)

    p_ell = subs.add_parser(
        "count-elliptic", help="count elliptic curves of fixed cycle length"
    )
    _add_degree_flags(p_ell)
    p_ell.add_argument("--seed", type=int, default=0)
    p_ell.add_argument("--cache", action="store_true", help="reuse cached counts")
    p_ell.add_argument("--quiet", action="store_true", help="print the bare integer")
    p_ell.add_argument(
        "--breakdown", action="store_true", help="include every evaluated term"
    )
    p_ell.add_argument(
        "--verify-direct",
        action="store_true",
        help="re-count by direct enumeration when the degree is small enough",
    )
    p_ell.set_defaults(func=cmd_count_elliptic)

    p_render = subs.add_parser("render", help="draw a serialized curve as SVG")
    p_render.add_argument("curve", help="path to a curve JSON file")
    p_render.add_argument("--out", help="output SVG path (default: input stem)")
    p_render.set_defaults(func=cmd_render)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    args.raw_command = ["tropicount"] + argv
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3 if _INFEASIBLE_MARK in str(exc) else 2


if __name__ == "__main__":
    sys.exit(main())
