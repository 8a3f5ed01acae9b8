from decimal import Decimal, Context, ROUND_FLOOR, ROUND_CEILING
from fractions import Fraction
from typing import Union

from src.config import settings
from src.exceptions import InputParseError, NegativeEntryError

# Exact mode works on Fraction, float mode on float. Every algorithm only uses
# + * / and comparisons, so both flow through the same code.
Scalar = Fraction
Number = Union[Fraction, float]

ZERO = Fraction(0)
ONE = Fraction(1)


def parse_scalar(value: Union[str, int, Fraction]) -> Fraction:
    """
    Convert an entry to an exact nonnegative rational.

    Accepts integers, Fractions and strings in "p/q", integer or finite
    decimal notation ("0.125", "1e-3"). Decimal strings are converted exactly,
    never through float.
    """
    if isinstance(value, bool):
        raise InputParseError(f"boolean is not a matrix entry: {value!r}")

    if isinstance(value, float):
        raise InputParseError(f"float entries are not exact, pass a string instead: {value!r}")

    try:
        result = Fraction(value.strip()) if isinstance(value, str) else Fraction(value)
    except (ValueError, ZeroDivisionError, TypeError) as e:
        raise InputParseError(f"cannot parse entry {value!r}: {e}") from e

    if result < 0:
        raise NegativeEntryError(f"negative entry {value!r}, only nonnegative matrices are supported")

    return result


def format_rational(value: Number) -> str:
    """Always "p/q", so readers never mistake an integer-looking value for a rounded one."""
    exact = value if isinstance(value, Fraction) else Fraction(value)
    return f"{exact.numerator}/{exact.denominator}"


def to_decimal(value: Number, rounding: str, digits: int = None) -> Decimal:
    """Round `value` to `digits` significant digits in the direction "down" or "up"."""
    digits = digits or settings.significant_digits
    exact = value if isinstance(value, Fraction) else Fraction(value)
    context = Context(prec=digits, rounding=ROUND_FLOOR if rounding == "down" else ROUND_CEILING)

    if exact == 0:
        return Decimal(0)

    return context.divide(Decimal(exact.numerator), Decimal(exact.denominator))


def is_exact(value: Number) -> bool:
    return isinstance(value, Fraction)
