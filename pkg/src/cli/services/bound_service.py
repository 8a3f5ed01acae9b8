from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import pandas as pd

from src.bounds import (ALL_METHODS, BoundInterval, BoundMethod, collect_intervals, intersect, nth_root_enclosure,
                        p_m, zero_interval)
from src.cli.dto import BestBoundsDTO, BoundRowDTO, CondensationDTO, RunReport, SetConstantsDTO, format_number
from src.config import settings
from src.core import MatrixSet, set_constants, to_decimal
from src.exceptions import BudgetExceededError
from src.products import NormTable, norm_table
from src.utils.decorators import execution_timer
from src.utils.logger import get_logger

logger = get_logger("bound_service")


@dataclass(frozen=True)
class BoundOptions:
    n_max: int = settings.n_max
    methods: Tuple[BoundMethod, ...] = ALL_METHODS
    ptilde: bool = False
    rel_tol: float = settings.rel_tol
    prune: bool = settings.prune
    budget: int = settings.frontier_budget


class BoundService:

    def __init__(self, options: BoundOptions):
        self.options = options

    def _table(self, s: MatrixSet) -> Tuple[NormTable, Optional[int]]:
        try:
            return norm_table(s, self.options.n_max, self.options.prune, self.options.budget), None
        except BudgetExceededError as e:
            if e.partial is None or e.partial.n_max == 0:
                raise
            logger.warning(f"budget exceeded, reporting lengths 1..{e.length_reached}")
            return e.partial, e.length_reached

    def _intervals(self, s: MatrixSet, t: NormTable) -> List[BoundInterval]:
        return collect_intervals(s, t, self.options.methods, self.options.rel_tol, self.options.prune,
                                 self.options.budget)

    def _report(self, s: MatrixSet, t: NormTable, intervals: Sequence[BoundInterval],
                partial_length: Optional[int]) -> RunReport:
        rows = [BoundRowDTO.from_entity(i) for i in intervals]
        if BoundMethod.CONNECTED in self.options.methods and not (s.all_zero or t.condensation.is_strongly_connected):
            rows.append(BoundRowDTO.skipped(BoundMethod.CONNECTED.value,
                                            f"skipped: dependency graph has {t.condensation.size} components"))
        return RunReport(
            input_digest=s.digest(),
            arithmetic="exact" if s.is_exact else "float",
            certified=s.is_exact and all(i.certified for i in intervals),
            constants=SetConstantsDTO.from_entity(s),
            condensation=CondensationDTO.from_entity(t.condensation),
            bounds=rows,
            best=BestBoundsDTO.from_entity(intersect(intervals)) if intervals else None,
            partial=partial_length is not None,
            partial_length=partial_length,
        )

    @execution_timer("Bounds")
    def bound(self, s: MatrixSet) -> RunReport:
        t, partial_length = self._table(s)
        if s.all_zero:
            return self._report(s, t, [zero_interval(self.options.methods[0], 1)], partial_length)
        return self._report(s, t, self._intervals(s, t), partial_length)

    def _ptilde_lower(self, s: MatrixSet, n: int) -> Fraction:
        """max over 0 <= δ <= D of (P_{n+δ} lo)^{1/(n+δ)}, stopping at the first length over budget."""
        roots = []
        for delta in range(s.dim + 1):
            try:
                enclosure = p_m(s, n + delta, self.options.rel_tol, self.options.prune, self.options.budget)
            except BudgetExceededError:
                logger.warning(f"P_{n + delta} is over budget, lower_ptilde at n = {n} stops at length {n + delta - 1}")
                break
            roots.append(nth_root_enclosure(enclosure.lo, n + delta).lo)
        return max(roots)

    @execution_timer("Convergence")
    def converge(self, s: MatrixSet) -> Tuple[pd.DataFrame, Optional[int]]:
        """
        Running best lower / upper bounds per n with their gap and gap·n.

        Also carries ‖Σⁿ‖^{1/n}, the Fekete-form running min of (D‖Σⁿ‖)^{1/n}
        and, for connected graphs, the running max of (K‖Σⁿ‖)^{1/n}.
        """
        t, partial_length = self._table(s)
        intervals = self._intervals(s, t)
        connected = not s.all_zero and t.condensation.is_strongly_connected
        K = set_constants(s).K if connected else None

        rows = []
        lower, upper = None, None
        upper_fekete, lower_fekete = None, None
        for n in range(1, t.n_max + 1):
            norm = t.norm(n)
            norm_upper = nth_root_enclosure(s.dim * norm, n).hi
            upper_fekete = norm_upper if upper_fekete is None else min(upper_fekete, norm_upper)
            if connected:
                norm_lower = nth_root_enclosure(K * norm, n).lo
                lower_fekete = norm_lower if lower_fekete is None else max(lower_fekete, norm_lower)

            lowers = [i.lower_root for i in intervals if i.n == n]
            uppers = [i.upper_root for i in intervals if i.n == n]
            ptilde_lower = None
            if self.options.ptilde:
                ptilde_lower = Fraction(0) if s.all_zero else self._ptilde_lower(s, n)
                lowers.append(ptilde_lower)
                uppers.append(norm_upper)
            lower = max(lowers + ([lower] if lower is not None else []))
            upper = min(uppers + ([upper] if upper is not None else []))

            row = {
                "n": n,
                "lower": str(to_decimal(lower, "down")),
                "lower_rounding": "down",
                "upper": str(to_decimal(upper, "up")),
                "upper_rounding": "up",
                "gap": format_number(upper - lower),
                "gap_n": format_number((upper - lower) * n),
                "norm_root": format_number(float(norm) ** (1 / n)),
                "upper_fekete": format_number(upper_fekete),
                "lower_fekete": format_number(lower_fekete) if connected else "",
            }
            for method in self.options.methods:
                # intervals are ordered by n per method; blondel only exists at n = 1
                matching = [i for i in intervals if i.method == method and i.n <= n]
                row[f"ratio_{method.value}"] = format_number(matching[-1].ratio) if matching else ""
            if ptilde_lower is not None:
                row["lower_ptilde"] = format_number(ptilde_lower)
            rows.append(row)

        return pd.DataFrame(rows), partial_length
