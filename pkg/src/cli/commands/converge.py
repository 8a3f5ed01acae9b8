import argparse
import sys

from src.cli.commands.common import add_input_arguments, add_method_argument, load_matrix_set, parse_methods
from src.cli.services import BoundOptions, BoundService, ReportWriter
from src.exceptions import BudgetExceededError


def add_parser(subparsers) -> None:
    parser = subparsers.add_parser("converge", help="running best bounds, gap and gap·n per n")
    add_input_arguments(parser)
    add_method_argument(parser, allow_ptilde=True)
    parser.set_defaults(handler=cmd_converge, output="csv")


def cmd_converge(args: argparse.Namespace) -> int:
    methods, ptilde = parse_methods(args.method, allow_ptilde=True)
    service = BoundService(BoundOptions(n_max=args.n_max, methods=methods, ptilde=ptilde, rel_tol=args.rel_tol,
                                        prune=args.prune, budget=args.budget))
    df, partial_length = service.converge(load_matrix_set(args))

    sys.stdout.write(ReportWriter(args.output).converge(df, partial_length))
    return BudgetExceededError.exit_code if partial_length is not None else 0
