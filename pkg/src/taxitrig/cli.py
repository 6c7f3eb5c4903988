"""Command-line interface: ``taxitrig {eval,deriv,table,plot,verify}``.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 I/O error.  The default numeric mode comes from ``TAXITRIG_MODE``
(``exact`` or ``float``) and falls back to ``exact``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import __version__
from .derivatives import DerivForm, derivative
from .errors import TaxitrigError, UsageError
from .functions import TrigFunction, evaluate
from .numeric import Backend, Scalar
from .plotting import write_svg
from .series import figure_series, table_series
from .verification import (
    DEFAULT_EXCLUSION,
    DEFAULT_H,
    DEFAULT_TOLERANCE,
    GridSpec,
    run_all,
)

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3

MODE_ENV = "TAXITRIG_MODE"


class _Parser(argparse.ArgumentParser):
    """Lets negative rationals like ``-3/4`` and ``-16:16`` pass as values."""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = re.compile(r"^-\.?\d")

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _exact(text: str) -> Fraction:
    return Scalar.parse(text, Backend.EXACT).value


def _mode_options(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--mode", choices=[b.value for b in Backend], help="numeric backend")
    group.add_argument("--exact", dest="mode", action="store_const", const="exact", help="exact rational arithmetic")
    group.add_argument("--float", dest="mode", action="store_const", const="float", help="binary64 floating point")


def _backend(args) -> Backend:
    if args.mode:
        return Backend.parse(args.mode)
    env = os.environ.get(MODE_ENV)
    if env:
        return Backend.parse(env)
    return Backend.EXACT


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="taxitrig", description="Taxicab trigonometry in t-radians.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate a function at theta")
    p.add_argument("fn")
    p.add_argument("theta")
    _mode_options(p)

    p = sub.add_parser("deriv", help="evaluate a derivative at theta")
    p.add_argument("fn")
    p.add_argument("theta")
    p.add_argument("--form", default="direct", choices=[f.value for f in DerivForm])
    _mode_options(p)

    p = sub.add_parser("table", help="tabulate a function on [from, to)")
    p.add_argument("fn")
    p.add_argument("start", metavar="from")
    p.add_argument("end", metavar="to")
    p.add_argument("step")
    p.add_argument("--format", default="csv", choices=["csv", "json"])
    p.add_argument("-o", "--output", help="write here instead of stdout")
    _mode_options(p)

    p = sub.add_parser("plot", help="write an SVG figure")
    p.add_argument("fns", nargs="+", metavar="fn")
    p.add_argument("--from", dest="start", default="0")
    p.add_argument("--to", dest="end", default="8")
    p.add_argument("--samples", type=int, default=400)
    p.add_argument("-o", "--out", help="SVG path (default: <fns>.svg)")
    p.add_argument("--y-limit", type=float, default=4.0, help="clip values beyond +-this")

    p = sub.add_parser("verify", help="run the verification sweeps")
    p.add_argument("--range", dest="range_", default="0:8", metavar="START:END")
    p.add_argument("--step", default="1/128")
    p.add_argument("--h", type=float, default=DEFAULT_H, help="finite-difference step")
    p.add_argument("--tol", type=float, default=DEFAULT_TOLERANCE, help="float oracle tolerance")
    p.add_argument("--exclusion", type=float, default=DEFAULT_EXCLUSION, help="breakpoint exclusion radius")
    p.add_argument("--samples", type=int, default=1000, help="extra float oracle points")
    p.add_argument("--show", type=int, default=10, help="failures to print per suite")
    return parser


# -- commands ---------------------------------------------------------------


def cmd_eval(args, out) -> int:
    theta = Scalar.parse(args.theta, _backend(args))
    print(evaluate(TrigFunction.parse(args.fn), theta), file=out)
    return EXIT_OK


def cmd_deriv(args, out) -> int:
    theta = Scalar.parse(args.theta, _backend(args))
    print(derivative(TrigFunction.parse(args.fn), theta, args.form), file=out)
    return EXIT_OK


def _json_number(x: Optional[Scalar]):
    if x is None:
        return None
    return str(x) if x.is_exact else float(x)


def format_table(series, fmt: str) -> str:
    buf = io.StringIO(newline="")
    if fmt == "csv":
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["theta", "value", "flag"])
        for (theta, value), flag in zip(series.points, series.flags()):
            writer.writerow([str(theta), "" if value is None else str(value), flag])
    else:
        doc = {
            "function": series.function.value,
            "points": [[_json_number(t), _json_number(v)] for t, v in series.points],
            "flags": series.flags(),
            "segment_breaks": [_json_number(b) for b in series.segment_breaks],
            "asymptotes": [_json_number(b) for b in series.asymptotes],
        }
        buf.write(json.dumps(doc) + "\n")
    return buf.getvalue()


def cmd_table(args, out) -> int:
    series = table_series(
        TrigFunction.parse(args.fn), _exact(args.start), _exact(args.end), _exact(args.step), _backend(args)
    )
    text = format_table(series, args.format)
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_OK


def cmd_plot(args, out) -> int:
    fns = [TrigFunction.parse(f) for f in args.fns]
    series = figure_series(fns, _exact(args.start), _exact(args.end), args.samples)
    path = args.out or "_".join(f.value for f in fns) + ".svg"
    write_svg(path, series, y_limit=args.y_limit)
    print(path, file=out)
    return EXIT_OK


def _parse_range(text: str) -> tuple[Fraction, Fraction]:
    start, sep, end = text.partition(":")
    if not sep:
        raise UsageError(f"range must look like START:END, got {text!r}")
    return _exact(start), _exact(end)


def cmd_verify(args, out) -> int:
    start, end = _parse_range(args.range_)
    grid = GridSpec(start, end, _exact(args.step), args.exclusion)
    reports = run_all(grid, h=args.h, tolerance=args.tol, samples=args.samples)
    print(f"grid [{start}, {end}) step {grid.step}: {len(grid)} points; h={args.h:g} tol={args.tol:g}", file=out)
    for report in reports:
        print(report.summary(), file=out)
        for failure in report.failures[: args.show]:
            print(
                f"  {failure.function} theta={failure.theta} form={failure.form}: "
                f"expected {failure.expected}, got {failure.actual}",
                file=out,
            )
    ok = all(r.passed for r in reports)
    print("all suites passed" if ok else "verification FAILED", file=out)
    return EXIT_OK if ok else EXIT_FAILED


COMMANDS = {
    "eval": cmd_eval,
    "deriv": cmd_deriv,
    "table": cmd_table,
    "plot": cmd_plot,
    "verify": cmd_verify,
}


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return COMMANDS[args.command](args, out)
    except TaxitrigError as exc:
        print(f"taxitrig: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"taxitrig: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
