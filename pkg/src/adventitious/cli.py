"""Command-line entry point: ``adventitious {solve,search,verify,counts,minpoly}``."""

from __future__ import annotations

import argparse
import logging
import sys
from fractions import Fraction

from .cyclotomic import format_polynomial, make_context, minimal_polynomial
from .oracle import DEFAULT_DIGITS
from .search import Convention, default_workers, enumerate_triplets, expected_count, export, run_search
from .solver import DEFAULT_TOL, InvalidTripletError, Triplet, solve, tripp_agrees
from .trig import ConductorNotDivisibleBy4Error, TangentPoleError, cos_of, sin_of, tan_of
from .verify import format_table, run_checks

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _convention(text: str) -> Convention:
    try:
        return Convention.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _tol(text: str) -> Fraction:
    try:
        tol = Fraction(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad tolerance {text!r}") from exc
    if not 0 < tol < Fraction(1, 4):
        raise argparse.ArgumentTypeError("tolerance must lie in (0, 1/4)")
    return tol


def _digits(text: str) -> int:
    d = int(text)
    if d < 50:
        raise argparse.ArgumentTypeError("need at least 50 digits")
    return d


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="adventitious", description="Exact adventitious-angle solver and search.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", help="derive theta for one triplet")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--unit", type=int, default=180, help="angle unit is pi/UNIT radians")
    p.add_argument("--digits", type=_digits, default=DEFAULT_DIGITS)

    p = sub.add_parser("search", help="exhaustive search over a convention")
    p.add_argument("--convention", type=_convention, required=True,
                   help="tripp-even, full or unit:N")
    p.add_argument("--digits", type=_digits, default=DEFAULT_DIGITS)
    p.add_argument("--tol", type=_tol, default=DEFAULT_TOL)
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--out")
    p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("verify", help="reproduce every published count and identity")
    p.add_argument("--quick", action="store_true", help="skip the exhaustive searches")
    p.add_argument("--jobs", type=int, default=None)

    p = sub.add_parser("counts", help="size of a triplet space")
    p.add_argument("--convention", type=_convention, required=True)

    p = sub.add_parser("minpoly", help="minimal polynomials of cos/sin/tan(2*pi*J/N)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--angle", type=int, required=True, help="index J")
    return parser


def _cmd_solve(args) -> int:
    try:
        t = Triplet(args.a, args.b, args.c, args.unit)
    except InvalidTripletError as exc:
        print(f"invalid triplet: {exc}", file=sys.stderr)
        return EXIT_USAGE
    est, derived = solve(t, args.digits)
    print(f"triplet        {t}")
    print(f"theta estimate {str(est)[:args.digits // 2]}")
    print(f"derived angle  {derived}  ({derived.classification.value})")
    if derived.certified:
        print(f"tan formula    {'agrees' if tripp_agrees(t, derived.half_steps) else 'DISAGREES'}")
    return EXIT_OK


def _cmd_search(args) -> int:
    report = run_search(args.convention, args.digits, args.tol, args.jobs)
    print(
        f"{report.convention.name}: {report.total_enumerated} triplets, "
        f"{report.integral_count} integral, {report.half_integral_count} half-integral "
        f"({report.prefilter_candidates} prefilter hits, {report.rejected_candidates} rejected, "
        f"{report.elapsed_seconds:.1f}s on {report.workers} worker(s))"
    )
    if args.out:
        export(report, args.format, args.out)
    else:
        for r in report.solutions:
            t = r.triplet
            print(f"  ({t.a}, {t.b}, {t.c}; {Fraction(r.half_steps, 2)})  {r.classification.value}")
    return EXIT_OK


def _cmd_verify(args) -> int:
    jobs = args.jobs if args.jobs is not None else default_workers()
    results = run_checks(quick=args.quick, jobs=jobs)
    print(format_table(results))
    failed = [r.name for r in results if not r.passed]
    if failed:
        print(f"FAILED: {', '.join(failed)}", file=sys.stderr)
        return EXIT_FAILED
    return EXIT_OK


def _cmd_counts(args) -> int:
    conv = args.convention
    n = sum(1 for _ in enumerate_triplets(conv))
    print(f"{conv.name}: {n} (closed form {expected_count(conv)})")
    return EXIT_OK if n == expected_count(conv) else EXIT_FAILED


def _cmd_minpoly(args) -> int:
    if args.n < 1:
        print("--n must be positive", file=sys.stderr)
        return EXIT_USAGE
    ctx = make_context(args.n)
    print(f"conductor {args.n}, degree {ctx.degree}, angle {Fraction(360 * args.angle, args.n)} deg")
    print(f"cos: {format_polynomial(minimal_polynomial(cos_of(ctx, args.angle)))}")
    try:
        print(f"sin: {format_polynomial(minimal_polynomial(sin_of(ctx, args.angle)))}")
        print(f"tan: {format_polynomial(minimal_polynomial(tan_of(ctx, args.angle)))}")
    except ConductorNotDivisibleBy4Error:
        print("sin/tan: conductor not divisible by 4")
    except TangentPoleError:
        print("tan: pole")
    return EXIT_OK


COMMANDS = {
    "solve": _cmd_solve,
    "search": _cmd_search,
    "verify": _cmd_verify,
    "counts": _cmd_counts,
    "minpoly": _cmd_minpoly,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    return COMMANDS[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
