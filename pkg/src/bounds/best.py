from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from typing import Iterable, Sequence, Tuple

from src.bounds.intervals import BoundInterval, BoundMethod, zero_interval
from src.bounds.methods import blondel_nesterov_bounds, connected_bounds, main_bounds, traditional_bounds
from src.config import settings
from src.core import MatrixSet
from src.core.scalar import to_decimal
from src.exceptions import InconsistentBoundsError, NotConnectedError
from src.products import NormTable, norm_table
from src.utils.logger import get_logger

logger = get_logger("bounds")

ALL_METHODS: Tuple[BoundMethod, ...] = tuple(BoundMethod)


@dataclass(frozen=True)
class BestBounds:
    """Intersection of every collected interval; sources name the (method, n) attaining each end."""

    lower_root: Fraction
    upper_root: Fraction
    lower_source: Tuple[BoundMethod, int]
    upper_source: Tuple[BoundMethod, int]
    intervals: Tuple[BoundInterval, ...]

    @property
    def lower(self) -> Decimal:
        return to_decimal(self.lower_root, "down")

    @property
    def upper(self) -> Decimal:
        return to_decimal(self.upper_root, "up")

    @property
    def certified(self) -> bool:
        return all(i.certified for i in self.intervals)

    def contains(self, value) -> bool:
        return self.lower_root <= value <= self.upper_root


def collect_intervals(s: MatrixSet, t: NormTable, methods: Iterable[BoundMethod], rel_tol: float = None,
                      prune: bool = None, budget: int = None) -> list[BoundInterval]:
    """
    Every requested method at every n <= t.n_max.

    Connected bounds are skipped when the graph is not strongly connected,
    unless they are the only method requested.
    """
    methods = list(methods)
    disconnected = not (s.all_zero or t.condensation.is_strongly_connected)
    if disconnected and methods and all(method == BoundMethod.CONNECTED for method in methods):
        raise NotConnectedError(
            f"dependency graph has {t.condensation.size} components, connected bounds need a strongly connected one"
        )

    intervals = []
    for method in methods:
        if method == BoundMethod.BLONDEL:
            intervals.append(blondel_nesterov_bounds(s, rel_tol))
            continue

        if method == BoundMethod.CONNECTED and disconnected:
            logger.warning(f"skipping connected bounds: {t.condensation.size} components")
            continue

        for n in range(1, t.n_max + 1):
            if method == BoundMethod.MAIN:
                intervals.append(main_bounds(s, t, n))
            elif method == BoundMethod.CONNECTED:
                intervals.append(connected_bounds(s, t, n))
            else:
                intervals.append(traditional_bounds(s, t, n, rel_tol, prune, budget))

    return intervals


def intersect(intervals: Sequence[BoundInterval]) -> BestBounds:
    # first interval wins ties so the reported source is deterministic
    best_lower = max(intervals, key=lambda i: i.lower_root)
    best_upper = min(intervals, key=lambda i: i.upper_root)

    if best_lower.lower_root > best_upper.upper_root:
        raise InconsistentBoundsError(
            f"empty intersection: {best_lower.method.value} n={best_lower.n} lower {float(best_lower.lower_root)} "
            f"> {best_upper.method.value} n={best_upper.n} upper {float(best_upper.upper_root)}"
        )

    return BestBounds(
        lower_root=best_lower.lower_root,
        upper_root=best_upper.upper_root,
        lower_source=(best_lower.method, best_lower.n),
        upper_source=(best_upper.method, best_upper.n),
        intervals=tuple(intervals),
    )


def best_bounds(s: MatrixSet, n_max: int, methods: Iterable[BoundMethod] = ALL_METHODS, rel_tol: float = None,
                prune: bool = None, budget: int = None, t: NormTable = None) -> BestBounds:
    methods = list(methods)
    if s.all_zero:
        return intersect([zero_interval(methods[0] if methods else BoundMethod.MAIN, 1)])

    t = t or norm_table(s, n_max, prune, budget or settings.frontier_budget)
    return intersect(collect_intervals(s, t, methods, rel_tol, prune, budget))
