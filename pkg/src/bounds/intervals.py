from dataclasses import dataclass
from decimal import Decimal
from enum import Enum
from fractions import Fraction

from src.bounds.roots import nth_root_enclosure
from src.core.scalar import Number, to_decimal
from src.exceptions import InconsistentBoundsError


class BoundMethod(str, Enum):
    MAIN = "main"
    CONNECTED = "connected"
    TRADITIONAL = "traditional"
    BLONDEL = "blondel"


@dataclass(frozen=True)
class BoundInterval:
    """
    An enclosure of ρ(Σ): lower_root <= ρ(Σ) <= upper_root.

    The radicands are exact; the roots are outward enclosures of their n-th
    roots and `lower` / `upper` round those outward again to decimals.
    """

    method: BoundMethod
    n: int
    lower_radicand: Number
    upper_radicand: Number
    lower_root: Fraction
    upper_root: Fraction
    certified: bool = True
    loose: bool = False
    note: str = ""

    @property
    def lower(self) -> Decimal:
        return to_decimal(self.lower_root, "down")

    @property
    def upper(self) -> Decimal:
        return to_decimal(self.upper_root, "up")

    @property
    def ratio(self) -> float:
        if self.lower_root == 0:
            return float("inf") if self.upper_root > 0 else 1.0
        return float(self.upper_root / self.lower_root)

    def contains(self, value: Number) -> bool:
        return self.lower_root <= value <= self.upper_root


def make_interval(method: BoundMethod, n: int, lower_radicand: Number, upper_radicand: Number,
                  certified: bool = True, loose: bool = False, note: str = "") -> BoundInterval:
    lower_root = nth_root_enclosure(lower_radicand, n).lo
    upper_root = nth_root_enclosure(upper_radicand, n).hi

    if lower_root > upper_root:
        raise InconsistentBoundsError(
            f"{method.value} at n={n}: lower {float(lower_root)} exceeds upper {float(upper_root)}"
        )

    return BoundInterval(method=method, n=n, lower_radicand=lower_radicand, upper_radicand=upper_radicand,
                         lower_root=lower_root, upper_root=upper_root, certified=certified, loose=loose, note=note)


def zero_interval(method: BoundMethod, n: int) -> BoundInterval:
    return BoundInterval(method=method, n=n, lower_radicand=Fraction(0), upper_radicand=Fraction(0),
                         lower_root=Fraction(0), upper_root=Fraction(0), note="all matrices are zero")
