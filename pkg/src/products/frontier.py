from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Tuple

from cachetools import LRUCache, cached
from cachetools.keys import hashkey

from src.config import settings
from src.core import Matrix, MatrixSet, multiply
from src.exceptions import BudgetExceededError, OutOfRangeError
from src.utils.logger import get_logger

logger = get_logger("frontier")

Pruner = Callable[[Sequence[Matrix]], list[Matrix]]


@dataclass(frozen=True)
class Frontier:
    """All distinct products of a given length, in a canonical order."""

    length: int
    products: Tuple[Matrix, ...]

    @property
    def size(self) -> int:
        return len(self.products)


def prune_dominated(products: Sequence[Matrix]) -> list[Matrix]:
    """Drop every product that is entrywise <= another one. Input must be free of duplicates."""
    survivors = []
    for index, candidate in enumerate(products):
        dominated = any(
            other_index != index and candidate.is_dominated_by(other)
            for other_index, other in enumerate(products)
        )
        if not dominated:
            survivors.append(candidate)
    return survivors


def _canonical(products) -> list[Matrix]:
    # set-then-sort keeps the result independent of evaluation order
    return sorted(set(products), key=Matrix.sort_key)


def extend(frontier: Frontier, s: MatrixSet, pruner: Optional[Pruner] = None) -> Frontier:
    products = _canonical(multiply(p, a) for p in frontier.products for a in s.matrices)
    if pruner is not None:
        products = pruner(products)
    return Frontier(length=frontier.length + 1, products=tuple(products))


def _frontiers_key(s: MatrixSet, n_max: int, prune: bool, budget: int, pruner: Optional[Pruner] = None):
    # exact and float sets with equal entries compare equal
    return hashkey(s, s.is_exact, n_max, prune, budget, pruner)


@cached(cache=LRUCache(maxsize=32), key=_frontiers_key)
def enumerate_frontiers(s: MatrixSet, n_max: int, prune: bool, budget: int,
                        pruner: Optional[Pruner] = None) -> Tuple[Frontier, ...]:
    """
    Frontiers of lengths 1..n_max built by right extension.

    With `prune` the dominated products are removed at every length (using
    `pruner`, default `prune_dominated`). A frontier larger than `budget`
    raises BudgetExceededError carrying the frontiers built so far.
    """
    if n_max < 1:
        raise OutOfRangeError(f"n_max must be at least 1, got {n_max}")

    active_pruner = (pruner or prune_dominated) if prune else None

    first = _canonical(s.matrices)
    if active_pruner is not None:
        first = active_pruner(first)

    frontiers = [Frontier(length=1, products=tuple(first))]
    while frontiers[-1].length < n_max:
        candidate_size = frontiers[-1].size * s.size
        if candidate_size > budget:
            raise BudgetExceededError(
                f"frontier of length {frontiers[-1].length + 1} would hold up to {candidate_size} products, "
                f"budget is {budget}",
                length_reached=frontiers[-1].length,
                partial=tuple(frontiers),
            )

        frontiers.append(extend(frontiers[-1], s, active_pruner))
        logger.debug(f"length {frontiers[-1].length}: {frontiers[-1].size} products")

    return tuple(frontiers)


def frontier_at(s: MatrixSet, n: int, prune: bool = None, budget: int = None) -> Frontier:
    prune = settings.prune if prune is None else prune
    budget = budget or settings.frontier_budget
    return enumerate_frontiers(s, n, prune, budget)[-1]
