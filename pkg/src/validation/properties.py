from dataclasses import dataclass, field
from typing import Optional

from src.bounds import main_bounds
from src.config import settings
from src.core import MatrixSet, set_constants
from src.exceptions import EntryRangeViolationError, NotConnectedError
from src.graph import build_graph, distances, witness_product
from src.products import NormTable, entry_range_check, norm_table
from src.products.frontier import Pruner, prune_dominated


@dataclass
class PropertyReport:
    name: str
    checked: int = 0
    violations: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def fail(self, message: str) -> None:
        self.violations.append(message)


def check_submultiplicativity(t: NormTable, dim: int) -> PropertyReport:
    """‖Σ^{m+n}‖ <= D‖Σᵐ‖‖Σⁿ‖ for all m + n <= n_max."""
    report = PropertyReport("submultiplicativity")
    for m in range(1, t.n_max):
        for n in range(1, t.n_max - m + 1):
            report.checked += 1
            if t.norm(m + n) > dim * t.norm(m) * t.norm(n):
                report.fail(f"m={m}, n={n}: {t.norm(m + n)} > {dim} * {t.norm(m)} * {t.norm(n)}")
    return report


def check_supermultiplicativity(s: MatrixSet, t: NormTable) -> PropertyReport:
    """‖Σᵐ‖‖Σⁿ‖ <= (UD/V)^D ‖Σ^{m+n}‖ when the dependency graph is strongly connected."""
    if not t.condensation.is_strongly_connected:
        raise NotConnectedError("weak supermultiplicativity needs a strongly connected dependency graph")

    report = PropertyReport("supermultiplicativity")
    factor = 1 / set_constants(s).K
    for m in range(1, t.n_max):
        for n in range(1, t.n_max - m + 1):
            report.checked += 1
            if t.norm(m) * t.norm(n) > factor * t.norm(m + n):
                report.fail(f"m={m}, n={n}: {t.norm(m)} * {t.norm(n)} > {factor} * {t.norm(m + n)}")
    return report


def check_entry_range(s: MatrixSet, n_max: int, budget: int = None) -> PropertyReport:
    report = PropertyReport("entry range")
    for n in range(1, n_max + 1):
        report.checked += 1
        try:
            entry_range_check(s, n, budget)
        except EntryRangeViolationError as e:
            report.fail(str(e))
    return report


def check_pruning_equivalence(s: MatrixSet, n_max: int, pruner: Optional[Pruner] = None,
                              budget: int = None) -> PropertyReport:
    """Pruned and exhaustive tables must agree on every ‖Σⁿ‖ and ‖Σⁿ‖_C."""
    report = PropertyReport("pruning equivalence")
    budget = budget or settings.frontier_budget
    pruned = norm_table(s, n_max, True, budget, pruner or prune_dominated)
    exhaustive = norm_table(s, n_max, False, budget)

    for n in range(1, n_max + 1):
        report.checked += 1
        if pruned.norm(n) != exhaustive.norm(n):
            report.fail(f"n={n}: pruned norm {pruned.norm(n)} != exhaustive {exhaustive.norm(n)}")
        if pruned.component_norm[n - 1] != exhaustive.component_norm[n - 1]:
            report.fail(f"n={n}: component norms differ")
    return report


def check_main_ratio(s: MatrixSet, t: NormTable) -> PropertyReport:
    """Upper over lower radicand of the main bound is exactly D/K whenever the norm is positive."""
    report = PropertyReport("main ratio")
    expected = s.dim / set_constants(s).K
    for n in range(1, t.n_max + 1):
        interval = main_bounds(s, t, n)
        if interval.lower_radicand == 0:
            continue
        report.checked += 1
        if interval.upper_radicand / interval.lower_radicand != expected:
            report.fail(f"n={n}: radicand ratio {interval.upper_radicand / interval.lower_radicand} != {expected}")
    return report


def check_witness_positivity(s: MatrixSet) -> PropertyReport:
    """B(i, j) >= V^δ(i, j) for every reachable pair."""
    report = PropertyReport("witness positivity")
    graph = build_graph(s)
    table = distances(graph)
    V = set_constants(s).V

    for i in range(s.dim):
        for j in range(s.dim):
            if i == j or not table.reachable(i, j):
                continue
            report.checked += 1
            witness = witness_product(s, i, j, graph)
            if len(witness.matrices) != table(i, j) or witness.value < V ** table(i, j):
                report.fail(f"({i}, {j}): witness of length {len(witness.matrices)} has value {witness.value}")
    return report
