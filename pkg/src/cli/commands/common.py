import argparse
from typing import Tuple

from src.bounds import ALL_METHODS, BoundMethod
from src.config import settings
from src.core import MatrixSet
from src.data.entities import InputDocument
from src.data.generators import paper_examples
from src.exceptions import InputParseError
from src.utils.logger import get_logger

logger = get_logger("cli")

PTILDE = "ptilde"


def on_off(value: str) -> bool:
    if value not in ("on", "off"):
        raise argparse.ArgumentTypeError(f"expected on or off, got {value!r}")
    return value == "on"


def positive_int(value: str) -> int:
    number = int(value)
    if number < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return number


def add_input_arguments(parser: argparse.ArgumentParser) -> None:
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--input", help="JSON matrix-set document")
    source.add_argument("--example", choices=sorted(paper_examples()), help="built-in example set")
    parser.add_argument("--arithmetic", choices=["exact", "float"], default=settings.arithmetic)
    parser.add_argument("--n-max", type=positive_int, default=settings.n_max)
    parser.add_argument("--rel-tol", type=float, default=settings.rel_tol)
    parser.add_argument("--budget", type=positive_int, default=settings.frontier_budget,
                        help="largest frontier the enumeration may build")
    parser.add_argument("--prune", type=on_off, default=settings.prune, help="on|off")
    parser.add_argument("--output", choices=["table", "csv", "json"], default="table")


def add_method_argument(parser: argparse.ArgumentParser, allow_ptilde: bool = False) -> None:
    names = [m.value for m in BoundMethod] + ["all"] + ([PTILDE] if allow_ptilde else [])
    parser.add_argument("--method", default="all", help=f"comma separated list of {','.join(names)}")


def parse_methods(value: str, allow_ptilde: bool = False) -> Tuple[Tuple[BoundMethod, ...], bool]:
    """Methods in canonical order and whether the P̃ sequence was requested."""
    names = {name.strip() for name in value.split(",") if name.strip()}
    ptilde = allow_ptilde and PTILDE in names
    if allow_ptilde:
        names.discard(PTILDE)

    if "all" in names:
        return ALL_METHODS, ptilde

    unknown = names - {m.value for m in BoundMethod}
    if unknown or not (names or ptilde):
        raise InputParseError(f"unknown or empty method list: {value!r}")
    return tuple(m for m in BoundMethod if m.value in names), ptilde


def load_matrix_set(args: argparse.Namespace) -> MatrixSet:
    if args.example:
        s = paper_examples()[args.example]
    else:
        s = InputDocument.load(args.input).to_matrix_set()
    logger.info(f"loaded {s.size} matrices of dimension {s.dim} ({s.digest()[:12]})")

    return s.to_float() if args.arithmetic == "float" else s
