import argparse
import sys

from src.cli.commands.common import add_input_arguments, add_method_argument, load_matrix_set, parse_methods
from src.cli.services import BoundOptions, BoundService, ReportWriter
from src.exceptions import BudgetExceededError


def add_parser(subparsers) -> None:
    parser = subparsers.add_parser("bound", help="certified JSR intervals per method and n")
    add_input_arguments(parser)
    add_method_argument(parser)
    parser.set_defaults(handler=cmd_bound)


def cmd_bound(args: argparse.Namespace) -> int:
    methods, _ = parse_methods(args.method)
    service = BoundService(BoundOptions(n_max=args.n_max, methods=methods, rel_tol=args.rel_tol, prune=args.prune,
                                        budget=args.budget))
    report = service.bound(load_matrix_set(args))

    sys.stdout.write(ReportWriter(args.output).bound(report))
    return BudgetExceededError.exit_code if report.partial else 0
