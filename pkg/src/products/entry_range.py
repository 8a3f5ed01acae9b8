from dataclasses import dataclass
from typing import Optional

from src.config import settings
from src.core import MatrixSet, set_constants
from src.core.scalar import Number
from src.exceptions import EntryRangeViolationError
from src.products.frontier import frontier_at


@dataclass(frozen=True)
class EntryRangeReport:
    n: int
    products: int
    positive_entries: int
    smallest: Optional[Number]
    largest: Optional[Number]
    lower_limit: Optional[Number]
    upper_limit: Optional[Number]


def entry_range_check(s: MatrixSet, n: int, budget: int = None) -> EntryRangeReport:
    """Every positive entry of every length-n product must lie in [Vⁿ, Dⁿ⁻¹Uⁿ]."""
    frontier = frontier_at(s, n, prune=False, budget=budget or settings.frontier_budget)
    positive = [value for p in frontier.products for row in p.entries for value in row if value > 0]

    if not positive:
        return EntryRangeReport(n=n, products=frontier.size, positive_entries=0, smallest=None, largest=None,
                                lower_limit=None, upper_limit=None)

    constants = set_constants(s)
    lower_limit = constants.V ** n
    upper_limit = s.dim ** (n - 1) * constants.U ** n
    smallest, largest = min(positive), max(positive)

    if smallest < lower_limit or largest > upper_limit:
        raise EntryRangeViolationError(
            f"length {n}: entries span [{smallest}, {largest}] outside [{lower_limit}, {upper_limit}]"
        )

    return EntryRangeReport(n=n, products=frontier.size, positive_entries=len(positive), smallest=smallest,
                            largest=largest, lower_limit=lower_limit, upper_limit=upper_limit)
