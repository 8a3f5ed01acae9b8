import argparse
import sys

from src.cli.commands.common import add_input_arguments, load_matrix_set, positive_int
from src.cli.services import GrowthOptions, GrowthService, ReportWriter
from src.config import settings


def add_parser(subparsers) -> None:
    parser = subparsers.add_parser("growth", help="polynomial growth exponent r and the q_n series")
    add_input_arguments(parser)
    parser.add_argument("--n-cls", type=positive_int, default=settings.n_cls,
                        help="classification depth per component, automatic when omitted")
    parser.add_argument("--n-lo", type=positive_int, default=1, help="first n of the q_n series")
    parser.set_defaults(handler=cmd_growth)


def cmd_growth(args: argparse.Namespace) -> int:
    service = GrowthService(GrowthOptions(n_max=args.n_max, n_lo=args.n_lo, n_cls=args.n_cls, rel_tol=args.rel_tol,
                                          prune=args.prune, budget=args.budget))
    report, exit_code = service.growth(load_matrix_set(args))

    sys.stdout.write(ReportWriter(args.output).growth(report))
    return exit_code
