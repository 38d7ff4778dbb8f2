"""``fit3d``: fit the optimal root-mean-square line to a 3D point file.

Exit codes: 0 success, 2 parse/input error, 3 I/O error, 4 degenerate
configuration under ``--strict``.
"""

from __future__ import annotations

import argparse
import sys

from linefit3d._version import __version__
from linefit3d.eigen3 import DEFAULT_REL_TOL
from linefit3d.errors import DegenerateConfigurationError, EmptyCloudError, ParseError
from linefit3d.fitter import FitConfig, FitResult, fit_line
from linefit3d.io import STDIN, FitReport, InputFormat, emit_report, parse_points
from linefit3d.svg import emit_svg

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_IO = 3
EXIT_DEGENERATE = 4


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="fit3d",
        description="Fit the optimal root-mean-square straight line to points in 3D.",
    )
    p.add_argument("--input", required=True, help="point file, or - for standard input")
    p.add_argument(
        "--format", choices=[f.value for f in InputFormat], default=InputFormat.AUTO.value,
        help="csv, ws (whitespace separated) or auto (default)",
    )
    p.add_argument(
        "--tol-degeneracy", type=_positive_float, default=DEFAULT_REL_TOL, metavar="REL",
        help=f"relative eigenvalue gap treated as degenerate (default {DEFAULT_REL_TOL:g})",
    )
    p.add_argument("--strict", action="store_true", help="fail with exit code 4 if the direction is not unique")
    p.add_argument("--json", metavar="PATH", help="write the JSON report to PATH, or - for standard output")
    p.add_argument("--svg", metavar="PATH", help="write xy/xz/yz projection plots to PATH")
    p.add_argument("--pretty", action="store_true", help="indent the JSON report")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    return p


def summary(result: FitResult, source: str) -> str:
    def v(x):
        return "(" + ", ".join(f"{c:.10g}" for c in x) + ")"

    lines = [
        f"source:         {source}",
        f"points:         {result.n_points}",
        f"centroid:       {v(result.centroid)}",
        f"direction:      {v(result.direction)}",
        f"moment:         {v(result.moment)}",
        f"eigenvalues:    {v(result.eigenvalues)}",
        f"mean sq. dist.: {result.mean_square_distance:.10g}",
        f"rms distance:   {result.rms_distance:.10g}",
        f"classification: {result.classification.value}",
    ]
    if not result.is_unique:
        lines.append("warning: the optimal direction is not unique for these points")
    return "\n".join(lines) + "\n"


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    source = "<stdin>" if args.input == STDIN else args.input
    config = FitConfig(degeneracy_rel_tol=args.tol_degeneracy, strict_degenerate=args.strict)

    try:
        cloud = parse_points(args.input, args.format)
        result = fit_line(cloud, config)
    except (ParseError, EmptyCloudError) as exc:
        print(f"fit3d: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except DegenerateConfigurationError as exc:
        print(f"fit3d: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except OSError as exc:
        print(f"fit3d: cannot read input: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"fit3d: {exc}", file=sys.stderr)
        return EXIT_INPUT

    report = emit_report(FitReport.from_result(result, source), pretty=args.pretty) + "\n"
    try:
        if args.json == STDIN:
            sys.stdout.write(report)
        else:
            sys.stdout.write(summary(result, source))
            if args.json:
                with open(args.json, "w", encoding="utf-8", newline="\n") as f:
                    f.write(report)
        if args.svg:
            emit_svg(cloud, result, args.svg)
    except OSError as exc:
        print(f"fit3d: cannot write output: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
