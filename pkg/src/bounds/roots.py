import math
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction

from src.config import settings
from src.core.scalar import Number, to_decimal
from src.exceptions import OutOfRangeError


@dataclass(frozen=True)
class RootEnclosure:
    """lo <= x^(1/n) <= hi with dyadic (or exact) rational endpoints."""

    lo: Fraction
    hi: Fraction

    @property
    def lower(self) -> Decimal:
        return to_decimal(self.lo, "down")

    @property
    def upper(self) -> Decimal:
        return to_decimal(self.hi, "up")

    def contains(self, value: Number) -> bool:
        return self.lo <= value <= self.hi


def _float_guess(x: Fraction, n: int) -> float:
    # logs of the integer parts stay finite even when float(x) would overflow
    return math.exp((math.log(x.numerator) - math.log(x.denominator)) / n)


def nth_root_enclosure(x: Number, n: int, tolerance: float = None) -> RootEnclosure:
    """
    Enclose x^(1/n) by bisection over dyadic rationals.

    The endpoints satisfy lo^n <= x <= hi^n by exact comparison and
    (hi - lo) / max(hi, 1) <= tolerance. Exact roots (perfect powers whose
    root is a float or a small-denominator rational) come back as [r, r].
    """
    if n < 1:
        raise OutOfRangeError(f"root order must be at least 1, got {n}")
    if x < 0:
        raise OutOfRangeError(f"cannot take a root of the negative value {x}")

    x = x if isinstance(x, Fraction) else Fraction(x)
    tolerance = Fraction(tolerance or settings.root_tolerance)

    if x == 0 or x == 1 or n == 1:
        return RootEnclosure(lo=x, hi=x)

    guess = Fraction(_float_guess(x, n))
    for candidate in (guess, guess.limit_denominator(10 ** 6)):
        if candidate ** n == x:
            return RootEnclosure(lo=candidate, hi=candidate)

    step = max(guess, Fraction(1)) * Fraction(1, 2 ** 40)
    lo, hi = guess, guess
    while lo ** n > x:
        lo = max(Fraction(0), lo - step)
        step *= 2
    while hi ** n < x:
        hi += step
        step *= 2

    while hi - lo > tolerance * max(hi, Fraction(1)):
        middle = (lo + hi) / 2
        if middle ** n <= x:
            lo = middle
        else:
            hi = middle

    return RootEnclosure(lo=lo, hi=hi)
