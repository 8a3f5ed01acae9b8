import math
from fractions import Fraction
from dataclasses import dataclass, field

import numpy as np

from src.bounds import best_bounds, main_bounds, p_m, spectral_radius, traditional_bounds
from src.core import MatrixSet
from src.data.generators import jordan_block, random_connected_set, random_matrix_set, scaled_pair
from src.exceptions import JsrError
from src.graph import build_graph, scc
from src.growth import classify, growth_exponent, verify_growth
from src.products import norm_table
from src.utils.logger import get_logger
from src.validation.properties import (PropertyReport, check_entry_range, check_pruning_equivalence,
                                       check_submultiplicativity, check_supermultiplicativity)

logger = get_logger("selftest")

SEED = 20240401

# keep-first pruning loses the diagonal products of this set at length 2
PRUNING_PROBE = MatrixSet.of([[1, 0], [0, 0]], [[0, 0], [0, 2]], [[0, 1], [1, 0]])


@dataclass(frozen=True)
class SelftestHooks:
    """Deliberate faults for negative controls: a broken pruner, a shifted growth exponent."""

    break_pruning: bool = False
    r_offset: int = 0


@dataclass
class SelftestSummary:
    reports: list[PropertyReport] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports)

    @property
    def failed(self) -> list[PropertyReport]:
        return [r for r in self.reports if not r.passed]


def _keep_first(products):
    return list(products[:1])


def _jordan_regression(n_max: int) -> PropertyReport:
    report = PropertyReport("jordan block bounds")
    s = jordan_block()
    t = norm_table(s, n_max)
    for n in range(1, n_max + 1):
        report.checked += 1
        main = main_bounds(s, t, n)
        if (main.lower_radicand, main.upper_radicand) != (Fraction(1, 4), 2):
            report.fail(f"n={n}: main radicands {main.lower_radicand}, {main.upper_radicand}")

        traditional = traditional_bounds(s, t, n)
        if traditional.lower_root != 1 or traditional.upper_radicand != 2 * n:
            report.fail(f"n={n}: traditional [{traditional.lower_root}, radicand {traditional.upper_radicand}]")

        # the two ratios coincide at n = 4
        if n > 4 and not 8 ** (1 / n) < (2 * n) ** (1 / n):
            report.fail(f"n={n}: main ratio is not below the traditional ratio")
    return report


def _scaled_pair_regression(n_max: int) -> PropertyReport:
    report = PropertyReport("scaled pair bounds")
    s = scaled_pair(10)
    t = norm_table(s, n_max)
    for n in range(1, n_max + 1):
        report.checked += 1
        if t.norm(n) != 5 * 2 ** n:
            report.fail(f"n={n}: norm {t.norm(n)} != {5 * 2 ** n}")

    best = best_bounds(s, n_max, t=t)
    for interval in best.intervals:
        if not interval.contains(2):
            report.fail(f"{interval.method.value} n={interval.n} misses 2")
    return report


def _oracle_sandwich(rng: np.random.Generator, count: int, n: int) -> PropertyReport:
    report = PropertyReport("singleton oracle sandwich")
    for _ in range(count):
        s = random_matrix_set(rng, int(rng.integers(1, 4)), 1)
        report.checked += 1
        radius = spectral_radius(s.matrices[0])
        interval = main_bounds(s, norm_table(s, n), n)
        if not (interval.lower_root <= radius.lo and radius.hi <= interval.upper_root):
            report.fail(f"{s.matrices[0].entries}: [{radius.lo}, {radius.hi}] not inside main bounds")
    return report


def _pm_pruning(rng: np.random.Generator, count: int, m: int) -> PropertyReport:
    report = PropertyReport("P_m pruning equivalence")
    for _ in range(count):
        s = random_matrix_set(rng, 2, 2)
        report.checked += 1
        pruned, exhaustive = p_m(s, m, prune=True), p_m(s, m, prune=False)
        if not math.isclose(pruned.lo, exhaustive.lo, rel_tol=1e-8) or \
                not math.isclose(pruned.hi, exhaustive.hi, rel_tol=1e-8):
            report.fail(f"{s.digest()[:12]}: pruned [{pruned.lo}, {pruned.hi}] vs [{exhaustive.lo}, {exhaustive.hi}]")
    return report


def _growth_drift(r_offset: int, n_max: int) -> PropertyReport:
    report = PropertyReport("growth order drift")
    s = jordan_block()
    condensation = scc(build_graph(s))
    order = growth_exponent(condensation, classify(s, condensation, 6), s)
    verification = verify_growth(s, norm_table(s, n_max), order, 2, n_max, r=order.r + r_offset)

    report.checked += 1
    if order.r != 1:
        report.fail(f"r = {order.r}, expected 1")
    if abs(verification.slope) > 0.2:
        report.fail(f"ln q_n drifts with slope {verification.slope:.3f} at r = {verification.r}")
    return report


def run_selftest(hooks: SelftestHooks = SelftestHooks(), scale: int = 5) -> SelftestSummary:
    """Paper regressions and property suites at reduced scale."""
    rng = np.random.default_rng(SEED)
    pruner = _keep_first if hooks.break_pruning else None
    summary = SelftestSummary()

    checks = [
        ("jordan block bounds", lambda: _jordan_regression(8)),
        ("scaled pair bounds", lambda: _scaled_pair_regression(6)),
        ("singleton oracle sandwich", lambda: _oracle_sandwich(rng, scale, 8)),
        ("P_m pruning equivalence", lambda: _pm_pruning(rng, scale, 4)),
        ("growth order drift", lambda: _growth_drift(hooks.r_offset, 10)),
        ("pruning equivalence", lambda: check_pruning_equivalence(PRUNING_PROBE, 4, pruner)),
    ]
    for _ in range(scale):
        s = random_matrix_set(rng, int(rng.integers(2, 4)), int(rng.integers(2, 4)))
        connected = random_connected_set(rng, int(rng.integers(2, 4)), 2)
        checks.append(("submultiplicativity", lambda s=s: check_submultiplicativity(norm_table(s, 6), s.dim)))
        checks.append(("entry range", lambda s=s: check_entry_range(s, 5)))
        checks.append(("pruning equivalence", lambda s=s: check_pruning_equivalence(s, 6, pruner)))
        checks.append(("supermultiplicativity", lambda c=connected: check_supermultiplicativity(c, norm_table(c, 6))))

    for name, check in checks:
        try:
            report = check()
        except JsrError as e:
            report = PropertyReport(name)
            report.fail(f"{type(e).__name__}: {e}")

        logger.info(f"{report.name}: {'ok' if report.passed else 'FAILED'} ({report.checked} checked)")
        summary.reports.append(report)

    return summary

