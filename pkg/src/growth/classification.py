from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from src.bounds import connected_bounds
from src.config import settings
from src.core import MatrixSet
from src.exceptions import BudgetExceededError
from src.graph import Condensation
from src.products import enumerate_frontiers, norm_table
from src.utils.logger import get_logger

logger = get_logger("growth")


@dataclass(frozen=True)
class LambdaEnclosure:
    lo: Fraction
    hi: Fraction

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def relative_width(self) -> float:
        if self.hi == 0:
            return 0.0
        return float((self.hi - self.lo) / self.hi)

    def contains(self, value) -> bool:
        return self.lo <= value <= self.hi


ZERO_LAMBDA = LambdaEnclosure(lo=Fraction(0), hi=Fraction(0))


@dataclass(frozen=True)
class ComponentClassification:
    lambdas: Tuple[LambdaEnclosure, ...]
    critical: Tuple[bool, ...]
    depths: Tuple[int, ...]

    @property
    def max_lower(self) -> Fraction:
        return max(e.lo for e in self.lambdas)

    def lambda_enclosure(self) -> LambdaEnclosure:
        return LambdaEnclosure(lo=self.max_lower, hi=max(e.hi for e in self.lambdas))


def classification_depth(s: MatrixSet, budget: int = None, min_depth: int = None, max_depth: int = None) -> int:
    """Deepest n <= max_depth whose pruned frontier fits the budget, never below min_depth."""
    budget = budget or settings.frontier_budget
    min_depth = min_depth or settings.min_classification_depth
    max_depth = max_depth or settings.max_classification_depth

    try:
        enumerate_frontiers(s, max_depth, True, budget)
        return max_depth
    except BudgetExceededError as e:
        return max(min_depth, e.length_reached)


def _component_lambda(s: MatrixSet, members: Tuple[int, ...], trivial: bool, n_cls: int, prune: bool = None,
                      budget: int = None) -> Tuple[LambdaEnclosure, int]:
    if trivial:
        return ZERO_LAMBDA, n_cls

    restricted = s.restrict(members)
    if restricted.all_zero:
        return ZERO_LAMBDA, n_cls

    try:
        table = norm_table(restricted, n_cls, prune, budget)
    except BudgetExceededError as e:
        logger.warning(f"component {list(members)}: depth {n_cls} is over budget, classifying at {e.length_reached}")
        table = e.partial

    interval = connected_bounds(restricted, table, table.n_max)
    return LambdaEnclosure(lo=interval.lower_root, hi=interval.upper_root), table.n_max


def component_lambda_bounds(s: MatrixSet, members: Tuple[int, ...], trivial: bool, n_cls: int,
                            prune: bool = None, budget: int = None) -> LambdaEnclosure:
    """
    Corollary-style enclosure of λ_C from Σ restricted to the vertices of C.

    When depth n_cls is over budget the deepest length reached is used.
    """
    return _component_lambda(s, members, trivial, n_cls, prune, budget)[0]


def classify(s: MatrixSet, condensation: Condensation, n_cls: Optional[int] = None, prune: bool = None,
             budget: int = None) -> ComponentClassification:
    """
    λ_C enclosures per component and the critical flags.

    A component is critical when its upper end reaches the largest lower
    end, i.e. it cannot be certified strictly below λ.
    """
    lambdas, depths = [], []
    for members, trivial in zip(condensation.components, condensation.trivial):
        depth = n_cls or (0 if trivial else classification_depth(s.restrict(members), budget))
        enclosure, depth = _component_lambda(s, members, trivial, depth, prune, budget)
        lambdas.append(enclosure)
        depths.append(depth)

    max_lower = max(e.lo for e in lambdas)
    critical = tuple(e.hi >= max_lower for e in lambdas)
    logger.debug(f"critical components: {[i for i, c in enumerate(critical) if c]}")

    return ComponentClassification(lambdas=tuple(lambdas), critical=critical, depths=tuple(depths))
