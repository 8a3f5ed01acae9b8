from dataclasses import dataclass
from typing import Optional, Tuple

from src.bounds import BoundMethod, collect_intervals, intersect
from src.cli.dto import ComponentDTO, CondensationDTO, GrowthDTO, RunReport, SetConstantsDTO
from src.config import settings
from src.core import MatrixSet
from src.exceptions import BudgetExceededError, EnclosureTooWideError, InconsistentBoundsError
from src.growth import GrowthOrder, LambdaEnclosure, classify, growth_exponent, verify_growth
from src.products import NormTable, norm_table
from src.utils.decorators import execution_timer
from src.utils.logger import get_logger

logger = get_logger("growth_service")


@dataclass(frozen=True)
class GrowthOptions:
    n_max: int = settings.n_max
    n_lo: int = 1
    n_cls: Optional[int] = settings.n_cls
    rel_tol: float = settings.rel_tol
    prune: bool = settings.prune
    budget: int = settings.frontier_budget


class GrowthService:

    def __init__(self, options: GrowthOptions):
        self.options = options

    def _sharpen(self, s: MatrixSet, t: NormTable, order: GrowthOrder) -> LambdaEnclosure:
        """λ = ρ(Σ), so the component enclosure can be intersected with the bound methods."""
        best = intersect(collect_intervals(s, t, (BoundMethod.MAIN, BoundMethod.TRADITIONAL), self.options.rel_tol,
                                           self.options.prune, self.options.budget))
        lam = LambdaEnclosure(lo=max(order.lambda_enclosure.lo, best.lower_root),
                              hi=min(order.lambda_enclosure.hi, best.upper_root))
        if lam.lo > lam.hi:
            raise InconsistentBoundsError(
                f"component λ enclosure [{float(order.lambda_enclosure.lo)}, {float(order.lambda_enclosure.hi)}] "
                f"misses the bound interval [{float(best.lower_root)}, {float(best.upper_root)}]"
            )
        return lam

    @staticmethod
    def _components(order: GrowthOrder, condensation) -> list[ComponentDTO]:
        classification = order.classification
        return [
            ComponentDTO.from_entity(index, members, condensation.trivial[index], classification.critical[index],
                                     classification.depths[index], classification.lambdas[index])
            for index, members in enumerate(condensation.components)
        ]

    def _table(self, s: MatrixSet) -> Tuple[NormTable, Optional[int]]:
        try:
            return norm_table(s, self.options.n_max, self.options.prune, self.options.budget), None
        except BudgetExceededError as e:
            logger.warning(f"budget exceeded, q_n is limited to lengths 1..{e.length_reached}")
            return e.partial, e.length_reached

    @execution_timer("Growth")
    def growth(self, s: MatrixSet) -> Tuple[RunReport, int]:
        """
        Growth order report and the exit code.

        5 when λ is too loosely enclosed for q_n, otherwise 3 when the frontier
        budget cut the norm table short.
        """
        t, partial_length = self._table(s)
        report = RunReport(
            input_digest=s.digest(),
            arithmetic="exact" if s.is_exact else "float",
            certified=s.is_exact,
            constants=SetConstantsDTO.from_entity(s),
            condensation=CondensationDTO.from_entity(t.condensation),
            partial=partial_length is not None,
            partial_length=partial_length,
        )
        partial_code = BudgetExceededError.exit_code if report.partial else 0
        if s.all_zero:
            logger.info("all matrices are zero, no growth order to report")
            return report, partial_code

        classification = classify(s, t.condensation, self.options.n_cls, self.options.prune, self.options.budget)
        order = growth_exponent(t.condensation, classification, s)
        logger.info(f"r = {order.r}, witness chain {list(order.witness_chain)}")

        verification, exit_code, message = None, partial_code, ""
        if report.partial and self.options.n_lo > t.n_max:
            message = f"q_n needs lengths {self.options.n_lo}..{self.options.n_max}, the table stops at {t.n_max}"
            logger.error(message)
        else:
            try:
                verification = verify_growth(s, t, order, self.options.n_lo, t.n_max,
                                             lam=self._sharpen(s, t, order))
                if verification.ratio > settings.q_ratio_limit:
                    logger.warning(f"q_n spread β/α = {verification.ratio:.3g} exceeds {settings.q_ratio_limit}")
            except EnclosureTooWideError as e:
                exit_code, message = e.exit_code, f"{e}; rerun with a larger --n-cls"
                logger.error(message)

        report.growth = GrowthDTO.from_entity(order, self._components(order, t.condensation), verification,
                                              message)
        return report, exit_code
