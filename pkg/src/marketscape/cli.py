"""Command line interface.

Subcommands:
    analyze  compute the l0/l1/c1 series and write CSV or JSON
    diagram  dump per-window persistence pairs for debugging
    report   analyze plus a rendered figure next to the delimited output

Exit codes: 0 success, 1 usage error, 2 data error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .errors import DataError
from .pipeline import FORMATS, RunConfig, dump_diagrams, run

USAGE_ERROR = 1
DATA_ERROR = 2
IO_ERROR = 3


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors by default; the interface contract is 1
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


def _max_scale(text: str) -> float | None:
    if text == "auto":
        return None
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number or 'auto', got {text!r}")
    return value


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument(
        "--input",
        nargs="+",
        required=True,
        metavar="PATH",
        help="input CSV file(s): first column 'date', remaining columns prices",
    )
    sub.add_argument("--window", type=int, default=30, help="window length T (default 30)")
    sub.add_argument(
        "--assets",
        nargs="+",
        metavar="NAME",
        help="asset columns to use (default: all)",
    )
    sub.add_argument("--format", choices=FORMATS, default="csv", dest="out_format")
    sub.add_argument("--out", required=True, help="output path ('-' for stdout)")
    sub.add_argument(
        "--max-scale",
        type=_max_scale,
        default=None,
        metavar="REAL|auto",
        help="Rips scale cap (default auto = window diameter)",
    )
    sub.add_argument("--jobs", type=int, default=1, help="worker processes (default 1)")
    sub.add_argument(
        "--log-level",
        default="warning",
        choices=("debug", "info", "warning", "error"),
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="marketscape", description=__doc__.splitlines()[0])
    commands = parser.add_subparsers(dest="command", required=True)

    analyze = commands.add_parser(
        "analyze", help="compute the indicator series and write it out"
    )
    _add_common(analyze)
    analyze.add_argument(
        "--normalized-out",
        metavar="PATH",
        help="also write the per-asset min-max normalized price series",
    )

    diagram = commands.add_parser(
        "diagram", help="dump per-window persistence pairs (debugging aid)"
    )
    _add_common(diagram)

    report = commands.add_parser(
        "report", help="analyze plus a rendered figure next to the output"
    )
    _add_common(report)
    report.add_argument(
        "--normalized-out",
        metavar="PATH",
        help="also write the per-asset min-max normalized price series",
    )
    report.add_argument(
        "--figure",
        metavar="PATH",
        help="figure path (default: output path with a .png suffix)",
    )
    return parser


def _config(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        inputs=tuple(Path(p) for p in args.input),
        out=Path(args.out),
        window=args.window,
        assets=tuple(args.assets) if args.assets else None,
        out_format=args.out_format,
        normalized_out=(
            Path(args.normalized_out)
            if getattr(args, "normalized_out", None)
            else None
        ),
        max_scale=args.max_scale,
        jobs=args.jobs,
    )


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=getattr(logging, args.log_level.upper()),
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        config = _config(args)
    except ValueError as exc:
        parser.error(str(exc))
    try:
        if args.command == "analyze":
            run(config)
        elif args.command == "diagram":
            dump_diagrams(config)
        else:
            result = run(config)
            from .plotting import render_report  # matplotlib import stays off other paths

            figure = (
                Path(args.figure)
                if args.figure
                else config.out.with_suffix(".png")
            )
            render_report(result.series, result.table, figure)
    except DataError as exc:
        logging.getLogger("marketscape").error("%s", exc)
        return DATA_ERROR
    except OSError as exc:
        logging.getLogger("marketscape").error("%s", exc)
        return IO_ERROR
    return 0


if __name__ == "__main__":
    sys.exit(main())
