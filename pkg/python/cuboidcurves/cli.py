"""Command-line interface: ``cuboidcurves <command> ...``.

Structured results go to stdout, diagnostics to stderr. Exit status is 0 on
success, 1 on a usage or input error and 2 when a computed value fails its
own verification.
"""

import argparse
import json
import logging
import re
import sys
from collections.abc import Sequence
from typing import Any

from . import __version__
from .cuboid import (
    CuboidWitness,
    eval_cuboid_polynomials,
    factor_equation_values,
    positivity_gate,
)
from .curves.conic import (
    DEFAULT_SEARCH_LIMIT,
    ConicSpec,
    find_conic_point,
    holzer_bounds,
    legendre_solvable,
    normalize_conic,
    parametrize_conic,
    solve_legendre,
)
from .errors import VerificationError
from .sampling import random_parameter_points
from .scan import ScanConfig, report_point, run_scan, scan_header, scan_points, write_scan
from .types import FormulaVariant, OutputFormat
from .utils import format_rational, parse_rational, validate_positive_integer

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFICATION = 2

# options whose values may be negative rationals, ranges or lists
VALUE_OPTIONS = frozenset({"--b", "--c", "--q", "--t", "--b-range", "--c-range", "--witness"})
_NEGATIVE_VALUE = re.compile(r"-[\d.]")


class _ArgumentParser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; 2 is reserved for verification failures here
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _print_json(payload: dict[str, Any]) -> None:
    sys.stdout.write(json.dumps(payload, indent=2) + "\n")


def _cmd_report(args: argparse.Namespace) -> int:
    report = report_point(
        parse_rational(args.b, "b"),
        parse_rational(args.c, "c"),
        variant=FormulaVariant(args.variant),
        search_limit=args.search_limit,
    )
    _print_json(report.to_dict())
    return EXIT_OK


def _write_rows(args: argparse.Namespace, emit) -> int:
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as stream:
            summary = emit(stream)
    else:
        summary = emit(sys.stdout)
    logger.info("wrote %d rows", summary.rows)
    return EXIT_OK


def _cmd_scan(args: argparse.Namespace) -> int:
    config = ScanConfig.from_ranges(
        args.b_range,
        args.c_range,
        output_format=OutputFormat(args.format),
        variant=FormulaVariant(args.variant),
        search_limit=args.search_limit,
        workers=args.workers,
    )
    return _write_rows(args, lambda stream: run_scan(config, stream))


def _cmd_sample(args: argparse.Namespace) -> int:
    variant = FormulaVariant(args.variant)
    validate_positive_integer(args.workers, "workers")
    validate_positive_integer(args.search_limit, "search_limit")
    points = random_parameter_points(args.count, args.height, seed=args.seed, variant=variant)
    header = scan_header(
        variant,
        {
            "count": args.count,
            "height": args.height,
            "seed": args.seed,
            "format": args.format,
            "variant": variant.value,
            "search_limit": args.search_limit,
        },
    )
    rows = scan_points(points, variant, args.search_limit, args.workers)
    return _write_rows(
        args, lambda stream: write_scan(rows, header, OutputFormat(args.format), stream)
    )


def _cmd_legendre(args: argparse.Namespace) -> int:
    MN = args.mn
    solvable = legendre_solvable(MN)
    solution = solve_legendre(MN, search_limit=args.search_limit)
    _print_json(
        {
            "MN": MN,
            "criterion": "3 | MN" if MN % 3 == 0 else "3 does not divide MN",
            "solvable": solvable,
            "bounds": list(holzer_bounds(MN)) if MN > 0 else None,
            "solution": None if solution is None else [solution.X, solution.Y, solution.Z],
        }
    )
    return EXIT_OK


def _cmd_conic(args: argparse.Namespace) -> int:
    spec = ConicSpec(parse_rational(args.q, "q"))
    form = normalize_conic(spec)
    point = find_conic_point(spec, search_limit=args.search_limit)
    parametrized = []
    for text in args.t or []:
        t = parse_rational(text, "t")
        if point is None:
            raise ValueError("the conic has no rational point to parametrize from")
        image = parametrize_conic(spec, point, t)
        parametrized.append(
            {
                "t": format_rational(t),
                "w": format_rational(image.w),
                "alpha": format_rational(image.alpha),
            }
        )
    _print_json(
        {
            "Q": format_rational(spec.Q),
            "legendre": {"M": form.M, "N": form.N, "m": form.m, "n": form.n, "MN": form.MN},
            "rational": point is not None,
            "point": None
            if point is None
            else [format_rational(point.w), format_rational(point.alpha)],
            "parametrized": parametrized,
        }
    )
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    wit = CuboidWitness.parse(args.witness)
    p_values = eval_cuboid_polynomials(wit)
    classification = positivity_gate(wit)
    _print_json(
        {
            "witness": args.witness,
            "p": {f"p{i}": format_rational(v) for i, v in enumerate(p_values)},
            "factor_equations": {
                label: {"value": format_rational(v), "holds": v == 0}
                for label, v in factor_equation_values(wit).items()
            },
            "classification": classification.value,
        }
    )
    return EXIT_OK


def _add_common(parser: argparse.ArgumentParser, rows: bool = False) -> None:
    parser.add_argument(
        "--variant",
        choices=[v.value for v in FormulaVariant],
        default=FormulaVariant.Printed.value,
        help="quartic used in the denominator of E21 (default: printed)",
    )
    parser.add_argument(
        "--search-limit",
        type=int,
        default=DEFAULT_SEARCH_LIMIT,
        help="largest Z-bound searched exhaustively for Legendre triples",
    )
    if rows:
        parser.add_argument(
            "--format",
            choices=[f.value for f in OutputFormat],
            default=OutputFormat.JsonLines.value,
        )
        parser.add_argument("--workers", type=int, default=1, help="worker processes")
        parser.add_argument("--output", "-o", help="write rows to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="cuboidcurves",
        description="Exact classification of the conics and cubics attached to the cuboid factor equations.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="log more (repeat for debug)"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    report = sub.add_parser("report", help="full report for one parameter point")
    report.add_argument("--b", required=True)
    report.add_argument("--c", required=True)
    _add_common(report)
    report.set_defaults(handler=_cmd_report)

    scan = sub.add_parser("scan", help="classify a grid of parameter points")
    scan.add_argument("--b-range", required=True, help="start:stop:step or a comma list")
    scan.add_argument("--c-range", required=True, help="start:stop:step or a comma list")
    _add_common(scan, rows=True)
    scan.set_defaults(handler=_cmd_scan)

    sample = sub.add_parser("sample", help="classify random non-singular parameter points")
    sample.add_argument("--count", type=int, default=20)
    sample.add_argument("--height", type=int, default=100)
    sample.add_argument("--seed", type=int, default=0)
    _add_common(sample, rows=True)
    sample.set_defaults(handler=_cmd_sample)

    legendre = sub.add_parser("legendre", help="solve X^2 - MN*Y^2 + 3*Z^2 = 0")
    legendre.add_argument("--mn", type=int, required=True)
    legendre.add_argument("--search-limit", type=int, default=DEFAULT_SEARCH_LIMIT)
    legendre.set_defaults(handler=_cmd_legendre)

    conic = sub.add_parser("conic", help="classify w^2 + 3 = Q*alpha^2")
    conic.add_argument("--q", required=True)
    conic.add_argument("--t", action="append", help="parameter to map to a point (repeatable)")
    conic.add_argument("--search-limit", type=int, default=DEFAULT_SEARCH_LIMIT)
    conic.set_defaults(handler=_cmd_conic)

    verify = sub.add_parser("verify", help="check a candidate cuboid")
    verify.add_argument("--witness", required=True, help="x1,x2,x3,d1,d2,d3,L")
    verify.set_defaults(handler=_cmd_verify)
    return parser


def _configure_logging(verbose: int) -> None:
    level = max(logging.DEBUG, logging.WARNING - 10 * verbose)
    logging.basicConfig(
        level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s"
    )
    logging.getLogger("cuboidcurves").setLevel(level)


def attach_negative_values(argv: Sequence[str]) -> list[str]:
    """Join ``--b -1/2`` into ``--b=-1/2``.

    argparse reads any token starting with ``-`` as an option unless it looks
    like a plain negative number, so ``-1/2``, ``-9:10`` and ``-1,0`` would be
    rejected as values.
    """
    out: list[str] = []
    tokens = iter(argv)
    for token in tokens:
        if token in VALUE_OPTIONS:
            value = next(tokens, None)
            if value is not None and _NEGATIVE_VALUE.match(value):
                out.append(f"{token}={value}")
                continue
            out.append(token)
            if value is not None:
                out.append(value)
            continue
        out.append(token)
    return out


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = parser.parse_args(attach_negative_values(argv))
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    _configure_logging(args.verbose)
    try:
        return args.handler(args)
    except VerificationError as e:
        logger.error("verification failed: %s", e)
        return EXIT_VERIFICATION
    except (ValueError, TypeError) as e:
        sys.stderr.write(f"{parser.prog}: error: {e}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
