from dataclasses import dataclass
from typing import Optional, Tuple

from src.config import settings
from src.core import MatrixSet, max_norm
from src.core.scalar import Number
from src.exceptions import BudgetExceededError, OutOfRangeError
from src.graph import Condensation, build_graph, scc
from src.products.frontier import Frontier, Pruner, enumerate_frontiers


@dataclass(frozen=True)
class NormTable:
    """
    ‖Σⁿ‖ and ‖Σⁿ‖_C for n = 1..n_max.

    Index 0 of `sigma_norm` / `component_norm` is length 1; use the accessors
    instead of indexing directly.
    """

    n_max: int
    sigma_norm: Tuple[Number, ...]
    component_norm: Tuple[Tuple[Number, ...], ...]
    pruned: bool
    condensation: Condensation

    def norm(self, n: int) -> Number:
        self._check(n)
        return self.sigma_norm[n - 1]

    def component(self, n: int, component: int) -> Number:
        self._check(n)
        return self.component_norm[n - 1][component]

    def _check(self, n: int) -> None:
        if not 1 <= n <= self.n_max:
            raise OutOfRangeError(f"length {n} outside the table range 1..{self.n_max}")


def _component_norms(frontier: Frontier, condensation: Condensation) -> Tuple[Number, ...]:
    return tuple(
        max(p.entries[i][j] for p in frontier.products for i in members for j in members)
        for members in condensation.components
    )


def _table(frontiers: Tuple[Frontier, ...], prune: bool, condensation: Condensation) -> NormTable:
    return NormTable(
        n_max=len(frontiers),
        sigma_norm=tuple(max(max_norm(p) for p in f.products) for f in frontiers),
        component_norm=tuple(_component_norms(f, condensation) for f in frontiers),
        pruned=prune,
        condensation=condensation,
    )


def norm_table(s: MatrixSet, n_max: int, pruning: bool = None, budget: int = None,
               pruner: Optional[Pruner] = None) -> NormTable:
    """
    Exhaustive ‖Σⁿ‖ and ‖Σⁿ‖_C by right extension of products.

    Pruning dominated products never changes the table since right
    multiplication and the max entry are monotone in the entrywise order.
    On BudgetExceededError the partial table up to the reached length is
    attached to the error.
    """
    pruning = settings.prune if pruning is None else pruning
    budget = budget or settings.frontier_budget
    condensation = scc(build_graph(s))

    try:
        frontiers = enumerate_frontiers(s, n_max, pruning, budget, pruner)
    except BudgetExceededError as e:
        raise BudgetExceededError(str(e), length_reached=e.length_reached,
                                  partial=_table(e.partial, pruning, condensation)) from e

    return _table(frontiers, pruning, condensation)


def max_component_norm(t: NormTable, n: int) -> Number:
    """max over components C of ‖Σⁿ‖_C."""
    t._check(n)
    return max(t.component_norm[n - 1])
