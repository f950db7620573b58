"""Command-line surface: every computation as a reproducible CSV/JSON run.

Exit codes: 0 success, 2 usage error, 3 numeric failure (non-convergence,
pole, truncation), 4 I/O error. Identical invocations produce
byte-identical output.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

import mpmath as mp

from .asymptotics import (
    DEFAULT_ZERO_COUNT,
    TruncationError,
    full_estimate,
    log_leading_estimate,
    logf_expansion_check,
    wave_sample,
)
from .counting import SlopeRange, count_series, symmetric_count
from .precision import DEFAULT_BITS, PrecisionContext
from .rho import rho_recurrence_table
from .special import PoleError
from .zeros import NonConvergenceError, ZeroFileError, bundled_zeros, load_zeros, refine_catalog

_RANGE_BY_NAME = {
    "half-open": SlopeRange.HALF_OPEN_01,
    "closed": SlopeRange.CLOSED_01,
    "half": SlopeRange.CLOSED_0_HALF,
}

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERIC = 3
EXIT_IO = 4


def _hp(value, digits: int) -> str:
    """Format an mpf with the given number of significant digits."""
    return mp.nstr(value, digits)


def _catalog(args):
    if getattr(args, "zero_file", None):
        return load_zeros(args.zero_file)
    return bundled_zeros()


# ---------------------------------------------------------------------------
# row producers (one per subcommand)
# ---------------------------------------------------------------------------


def _rows_count(args):
    if args.max < 0:
        raise UsageError("--max must be >= 0")
    if args.range == "symmetric":
        if args.max == 0:
            values = [1]
        else:
            values = symmetric_count(args.max)
        return ["n", "count"], [
            {"n": g, "count": str(v)} for g, v in enumerate(values)
        ]
    series = count_series(_RANGE_BY_NAME[args.range], args.max)
    return ["n", "count"], [
        {"n": n, "count": str(series[n])} for n in range(args.max + 1)
    ]


def _rows_rho(args):
    if args.max_height < 0:
        raise UsageError("--max-height must be >= 0")
    table = rho_recurrence_table(args.max_height)
    return ["h", "d", "rho"], [
        {"h": h, "d": d, "rho": str(v)} for h, d, v in table.entries()
    ]


def _rows_compare(args, ctx):
    ns = sorted(set(args.n))
    if not ns or ns[0] < 1:
        raise UsageError("every -n must be >= 1")
    series = count_series(SlopeRange.HALF_OPEN_01, ns[-1])
    zeros = refine_catalog(_catalog(args)[:args.k_zeros], ctx)
    rows = []
    with ctx.working():
        ln10 = mp.log(10)
        for n in ns:
            exact = mp.mpf(series[n])
            log_exact = mp.log(exact)
            est = full_estimate(n, zeros, args.k_zeros, ctx)
            rows.append({
                "n": n,
                "log10_count": _hp(log_exact / ln10, args.digits),
                "log10_leading": _hp(est.log_main / ln10, args.digits),
                "log10_estimate": _hp(est.log_estimate / ln10, args.digits),
                "residual_log": _hp(log_exact - est.log_main, args.digits),
            })
    return ["n", "log10_count", "log10_leading", "log10_estimate", "residual_log"], rows


def _rows_wave(args, ctx):
    if args.samples < 1:
        raise UsageError("--samples must be >= 1")
    if not (args.xmin > 0 and args.xmax >= args.xmin):
        raise UsageError("need 0 < xmin <= xmax")
    rows = []
    with ctx.working():
        lo = mp.mpf(args.xmin)
        hi = mp.mpf(args.xmax)
        for i in range(args.samples):
            if args.samples == 1:
                x = lo
            elif args.linear_x:
                x = lo + (hi - lo) * i / (args.samples - 1)
            else:
                x = lo * (hi / lo) ** (mp.mpf(i) / (args.samples - 1))
            y = wave_sample(x, ctx)
            rows.append({"x": _hp(x, args.digits), "y": _hp(y, args.digits)})
    return ["x", "y"], rows


def _rows_zeros(args, ctx):
    zeros = _catalog(args)
    if args.action == "refine":
        zeros = refine_catalog(zeros, ctx)
    return ["index", "t"], [
        {"index": i, "t": _hp(z.t, args.digits)} for i, z in enumerate(zeros, start=1)
    ]


def _rows_logf(args, ctx):
    zeros = refine_catalog(_catalog(args)[:args.k_zeros], ctx)
    rows = []
    for tau_text in args.tau:
        tau = ctx.real(tau_text)
        if not 0 < tau <= 1:
            raise UsageError(f"--tau must be in (0, 1], got {tau_text}")
        chk = logf_expansion_check(tau, zeros, args.k_zeros, ctx)
        rows.append({
            "tau": _hp(chk.tau, args.digits),
            "direct": _hp(chk.direct, args.digits),
            "expansion": _hp(chk.expansion, args.digits),
            "residual": _hp(chk.residual, args.digits),
        })
    return ["tau", "direct", "expansion", "residual"], rows


# ---------------------------------------------------------------------------
# wiring
# ---------------------------------------------------------------------------


class UsageError(ValueError):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="npcount",
        description="Exact and asymptotic Newton polygon counting.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--bits", type=int, default=DEFAULT_BITS,
                        help="working precision in bits (default %(default)s)")
    common.add_argument("--format", choices=("csv", "json"), default="csv",
                        help="output format (default %(default)s)")
    common.add_argument("--out", default=None, metavar="PATH",
                        help="write output to PATH instead of stdout")
    common.add_argument("--digits", type=int, default=15,
                        help="significant digits for floating columns (default %(default)s)")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common],
                       help="exact counts by height for a slope range")
    p.add_argument("--range", choices=("half-open", "closed", "half", "symmetric"),
                   default="half-open")
    p.add_argument("--max", type=int, required=True, help="largest height (or genus)")

    p = sub.add_parser("rho", parents=[common],
                       help="triangular table of counts by (height, depth)")
    p.add_argument("--max-height", type=int, required=True)

    p = sub.add_parser("compare", parents=[common],
                       help="exact count vs asymptotic estimate at given heights")
    p.add_argument("-n", dest="n", type=int, action="append", required=True,
                   help="height to evaluate (repeatable)")
    p.add_argument("--k-zeros", type=int, default=DEFAULT_ZERO_COUNT)
    p.add_argument("--zero-file", default=None)

    p = sub.add_parser("wave", parents=[common],
                       help="sample the first-zero oscillation wave")
    p.add_argument("--xmin", type=float, required=True)
    p.add_argument("--xmax", type=float, required=True)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--linear-x", action="store_true",
                   help="sample uniformly in x instead of log x")

    p = sub.add_parser("zeros", parents=[common],
                       help="dump or refine a zeta-zero table")
    p.add_argument("action", choices=("dump", "refine"))
    p.add_argument("--zero-file", default=None,
                   help="zero table (default: bundled first 100 zeros)")

    p = sub.add_parser("logf-check", parents=[common],
                       help="direct vs residue-expansion values of log f(e^-tau)")
    p.add_argument("--tau", action="append", required=True,
                   help="tau in (0, 1] (repeatable; parsed at full precision)")
    p.add_argument("--k-zeros", type=int, default=DEFAULT_ZERO_COUNT)
    p.add_argument("--zero-file", default=None)

    return parser


def _emit(header, rows, args) -> str:
    if args.format == "json":
        return json.dumps(rows, indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=header, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        try:
            ctx = PrecisionContext(args.bits)
        except (TypeError, ValueError) as exc:
            raise UsageError(str(exc)) from exc
        if args.command == "count":
            header, rows = _rows_count(args)
        elif args.command == "rho":
            header, rows = _rows_rho(args)
        elif args.command == "compare":
            header, rows = _rows_compare(args, ctx)
        elif args.command == "wave":
            header, rows = _rows_wave(args, ctx)
        elif args.command == "zeros":
            header, rows = _rows_zeros(args, ctx)
        elif args.command == "logf-check":
            header, rows = _rows_logf(args, ctx)
        else:  # pragma: no cover
            raise UsageError(f"unknown command {args.command!r}")
        text = _emit(header, rows, args)
        if args.out:
            with open(args.out, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        return EXIT_OK
    except (OSError, ZeroFileError) as exc:
        print(f"npcount: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (NonConvergenceError, PoleError, TruncationError, ArithmeticError) as exc:
        print(f"npcount: numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except ValueError as exc:
        print(f"npcount: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
