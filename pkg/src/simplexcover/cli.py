"""Command-line front end.

Subcommands: ``count`` (cover size), ``cover`` (JSON-lines dump), ``witness``
(locate one point), ``verify`` (coverage campaign, JSON report), ``render``
(d=2 SVG figure).  Exit codes: 0 success, 1 verification or runtime failure,
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .arith import ParseError, point_format, point_parse, rat_format, rat_parse
from .cover import CoverElement, build_cover, cover_count, delta
from .render import render_svg
from .verifier import (
    boundary_suite,
    coverage_report,
    format_failures,
    lattice_samples,
    random_samples,
)
from .witness import UncoveredPointError, in_domain, witness


def cover_record(el: CoverElement) -> dict:
    """Wire form of one element: permutations 1-based, rationals canonical."""
    return {
        "kind": el.kind,
        "v": list(el.v),
        "pi": list(el.perm),
        "anchor": [rat_format(c) for c in el.anchor],
    }


def parse_cover_record(line: str) -> CoverElement:
    """Inverse of cover_record; round-trips losslessly."""
    obj = json.loads(line)
    return CoverElement(
        kind=obj["kind"],
        v=tuple(int(c) for c in obj["v"]),
        perm=tuple(int(c) for c in obj["pi"]),
        anchor=tuple(rat_parse(c) for c in obj["anchor"]),
    )


def _add_dn(parser: argparse.ArgumentParser, fixed_d: int | None = None) -> None:
    if fixed_d is None:
        parser.add_argument("--d", type=int, required=True, help="dimension (>= 2)")
    parser.add_argument("--n", type=int, required=True, help="target scale (>= 1)")


def _validate_dn(parser: argparse.ArgumentParser, d: int, n: int) -> None:
    if d < 2:
        parser.error(f"--d must be at least 2 (got {d})")
    if n < 1:
        parser.error(f"--n must be at least 1 (got {n})")


def _cmd_count(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    _validate_dn(parser, args.d, args.n)
    print(cover_count(args.d, args.n))
    top = (args.n - 1) ** args.d
    base = (args.n + 1) ** args.d - args.n**args.d
    print(f"top={top} base={base}")
    return 0


def _cmd_cover(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    _validate_dn(parser, args.d, args.n)
    spec = build_cover(args.d, args.n)
    try:
        with open(args.out, "w", encoding="utf-8") as fh:
            for el in spec.elements:
                fh.write(json.dumps(cover_record(el)) + "\n")
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return 1
    return 0


def _cmd_witness(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    _validate_dn(parser, args.d, args.n)
    try:
        x = point_parse(args.point, args.d)
    except ParseError as exc:
        parser.error(str(exc))
    dl = delta(args.n)
    if not in_domain(x, args.n, dl):
        print(f"error: point {point_format(x)} is outside the target simplex", file=sys.stderr)
        return 1
    spec = build_cover(args.d, args.n)
    try:
        result = witness(x, args.d, args.n, spec)
    except UncoveredPointError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(
        json.dumps(
            {
                "route": result.route,
                "element": cover_record(result.element),
                "w": [rat_format(c) for c in result.w],
            }
        )
    )
    return 0


def _parse_eps(parser: argparse.ArgumentParser, raw: str | None, n: int) -> Fraction:
    dl = delta(n)
    if raw is None:
        return dl
    try:
        eps = rat_parse(raw)
    except ParseError as exc:
        parser.error(str(exc))
    if eps < 0:
        parser.error(f"--eps must be nonnegative (got {raw})")
    if eps > dl:
        parser.error(f"--eps must not exceed 1/(n+2) = {rat_format(dl)} (got {raw})")
    return eps


def _cmd_verify(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    _validate_dn(parser, args.d, args.n)
    if args.q < 1:
        parser.error(f"--q must be at least 1 (got {args.q})")
    if args.samples < 1:
        parser.error(f"--samples must be at least 1 (got {args.samples})")
    eps = _parse_eps(parser, args.eps, args.n)
    spec = build_cover(args.d, args.n)
    streams: list = []
    if args.mode in ("lattice", "all"):
        streams.append(lattice_samples(args.d, args.n, eps, args.q))
    if args.mode in ("random", "all"):
        streams.append(random_samples(args.d, args.n, eps, args.samples, args.seed))
    if args.mode in ("boundary", "all"):
        streams.append(boundary_suite(args.d, args.n, eps))
    samples = (x for stream in streams for x in stream)
    report = coverage_report(spec, samples)
    print(json.dumps(report.to_json()))
    if not report.success:
        if report.failures:
            print(f"uncovered points: {format_failures(report)}", file=sys.stderr)
        if report.routes.get("fallback", 0):
            print(f"fallback witnesses: {report.routes['fallback']}", file=sys.stderr)
        return 1
    return 0


def _cmd_render(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    if args.n < 1:
        parser.error(f"--n must be at least 1 (got {args.n})")
    spec = build_cover(2, args.n)
    svg = render_svg(spec, equilateral=args.equilateral, labels=args.labels)
    try:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(svg)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="simplexcover",
        description="Cover a right d-simplex of side n + 1/(n+2) with "
        "(n+1)^d + (n-1)^d - n^d unit right simplices, and verify it exactly.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count", help="print the cover size and kind breakdown")
    _add_dn(p_count)
    p_count.set_defaults(func=_cmd_count)

    p_cover = sub.add_parser("cover", help="write the cover as JSON-lines")
    _add_dn(p_cover)
    p_cover.add_argument("--out", required=True, help="output path")
    p_cover.set_defaults(func=_cmd_cover)

    p_witness = sub.add_parser("witness", help="locate a point in the cover")
    _add_dn(p_witness)
    p_witness.add_argument("--point", required=True, help="comma-separated rationals")
    p_witness.set_defaults(func=_cmd_witness)

    p_verify = sub.add_parser("verify", help="run a coverage campaign, print a JSON report")
    _add_dn(p_verify)
    p_verify.add_argument("--eps", default=None, help="margin (rational, <= 1/(n+2); default 1/(n+2))")
    p_verify.add_argument(
        "--mode", choices=("lattice", "random", "boundary", "all"), default="all"
    )
    p_verify.add_argument("--q", type=int, default=2, help="lattice resolution (step = delta/q)")
    p_verify.add_argument("--samples", type=int, default=10_000, help="random sample count")
    p_verify.add_argument("--seed", type=int, default=0, help="random seed")
    p_verify.set_defaults(func=_cmd_verify)

    p_render = sub.add_parser("render", help="write an SVG figure (d = 2)")
    p_render.add_argument("--n", type=int, required=True, help="target scale (>= 1)")
    p_render.add_argument("--out", required=True, help="output path")
    p_render.add_argument("--equilateral", action="store_true", help="shear to equilateral triangles")
    p_render.add_argument("--labels", action="store_true", help="label each element")
    p_render.set_defaults(func=_cmd_render)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args, parser)


if __name__ == "__main__":
    sys.exit(main())
