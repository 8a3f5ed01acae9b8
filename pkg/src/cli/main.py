import argparse
from typing import Optional, Sequence

from src.cli.commands import bound, converge, growth, selftest
from src.exceptions import JsrError
from src.utils.logger import get_logger

logger = get_logger("cli")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="jsr", description="Certified joint spectral radius bounds for "
                                                             "sets of nonnegative matrices")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in (bound, growth, converge, selftest):
        command.add_parser(subparsers)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)

    try:
        return args.handler(args)
    except JsrError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return e.exit_code
