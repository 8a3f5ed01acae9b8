import argparse
import sys

from src.cli.commands.common import positive_int
from src.cli.services import ReportWriter
from src.validation.selftest import SelftestHooks, run_selftest


def add_parser(subparsers) -> None:
    parser = subparsers.add_parser("selftest", help="example regressions and property suites")
    parser.add_argument("--scale", type=positive_int, default=5, help="random instances per property suite")
    parser.add_argument("--break-pruning", action="store_true", help="negative control: prune all but one product")
    parser.add_argument("--r-offset", type=int, default=0, help="negative control: shift the growth exponent")
    parser.add_argument("--output", choices=["table", "csv", "json"], default="table")
    parser.set_defaults(handler=cmd_selftest)


def cmd_selftest(args: argparse.Namespace) -> int:
    summary = run_selftest(SelftestHooks(break_pruning=args.break_pruning, r_offset=args.r_offset), args.scale)

    sys.stdout.write(ReportWriter(args.output).selftest(summary))
    return 0 if summary.passed else 1
