from src.bounds.intervals import BoundInterval, BoundMethod, make_interval, zero_interval
from src.bounds.perron import spectral_radius
from src.bounds.pm import p_m
from src.core import MatrixSet, set_constants
from src.exceptions import NotConnectedError
from src.products import NormTable, max_component_norm

BLONDEL_NOTE = "m read as |Σ| in ρ(S)/m"


def main_bounds(s: MatrixSet, t: NormTable, n: int) -> BoundInterval:
    """[K·max_C ‖Σⁿ‖_C, D·max_C ‖Σⁿ‖_C]^(1/n) with K = (V/(UD))^D."""
    top = max_component_norm(t, n)
    if s.all_zero:
        return zero_interval(BoundMethod.MAIN, n)

    constants = set_constants(s)
    return make_interval(BoundMethod.MAIN, n, constants.K * top, s.dim * top, certified=s.is_exact)


def connected_bounds(s: MatrixSet, t: NormTable, n: int) -> BoundInterval:
    """[K·‖Σⁿ‖, D·‖Σⁿ‖]^(1/n), valid only for a strongly connected dependency graph."""
    norm = t.norm(n)
    if s.all_zero:
        return zero_interval(BoundMethod.CONNECTED, n)

    if not t.condensation.is_strongly_connected:
        raise NotConnectedError(
            f"dependency graph has {t.condensation.size} components, use main_bounds instead"
        )

    constants = set_constants(s)
    return make_interval(BoundMethod.CONNECTED, n, constants.K * norm, s.dim * norm, certified=s.is_exact)


def traditional_bounds(s: MatrixSet, t: NormTable, m: int, rel_tol: float = None, prune: bool = None,
                       budget: int = None) -> BoundInterval:
    """[P_m, D·‖Σᵐ‖]^(1/m)."""
    norm = t.norm(m)
    if s.all_zero:
        return zero_interval(BoundMethod.TRADITIONAL, m)

    pm = p_m(s, m, rel_tol, prune, budget)
    return make_interval(BoundMethod.TRADITIONAL, m, pm.lo, s.dim * norm, certified=pm.certified and s.is_exact,
                         loose=pm.loose)


def blondel_nesterov_bounds(s: MatrixSet, rel_tol: float = None) -> BoundInterval:
    """[ρ(S)/|Σ|, ρ(S)] where S is the entrywise maximum over Σ."""
    if s.all_zero:
        return zero_interval(BoundMethod.BLONDEL, 1)

    radius = spectral_radius(s.entrywise_max(), rel_tol)
    return make_interval(BoundMethod.BLONDEL, 1, radius.lo / s.size, radius.hi, certified=radius.certified,
                         loose=radius.loose, note=BLONDEL_NOTE)
