from dataclasses import dataclass
from typing import Tuple

from cachetools import LRUCache, cached
from cachetools.keys import hashkey

from src.bounds.perron import PerronEnclosure, spectral_radius
from src.config import settings
from src.core import MatrixSet
from src.core.scalar import Number
from src.products import frontier_at


@dataclass(frozen=True)
class PmEnclosure:
    """Enclosure of P_m(Σ) = max over length-m products of ρ(A_1…A_m)."""

    m: int
    lo: Number
    hi: Number
    loose: bool = False
    certified: bool = True

    def contains(self, value: Number) -> bool:
        return self.lo <= value <= self.hi


@dataclass(frozen=True)
class PmTable:
    p: Tuple[PmEnclosure, ...]
    p_tilde: Tuple[PmEnclosure, ...]


def _merge(m: int, enclosures) -> PmEnclosure:
    enclosures = list(enclosures)
    return PmEnclosure(
        m=m,
        lo=max(e.lo for e in enclosures),
        hi=max(e.hi for e in enclosures),
        loose=any(e.loose for e in enclosures),
        certified=all(e.certified for e in enclosures),
    )


def _p_m_key(s: MatrixSet, m: int, rel_tol: float, prune: bool, budget: int):
    return hashkey(s, s.is_exact, m, rel_tol, prune, budget)


@cached(cache=LRUCache(maxsize=256), key=_p_m_key)
def _p_m(s: MatrixSet, m: int, rel_tol: float, prune: bool, budget: int) -> PmEnclosure:
    frontier = frontier_at(s, m, prune=prune, budget=budget)
    radii: list[PerronEnclosure] = [spectral_radius(p, rel_tol) for p in frontier.products]
    return _merge(m, radii)


def p_m(s: MatrixSet, m: int, rel_tol: float = None, prune: bool = None, budget: int = None) -> PmEnclosure:
    """
    Endpoint-wise max of the Perron enclosures over all length-m products.

    Dominated products may be pruned since Q >= P entrywise implies
    ρ(Q) >= ρ(P) for nonnegative matrices.
    """
    return _p_m(s, m, rel_tol or settings.rel_tol, settings.prune if prune is None else prune,
                budget or settings.frontier_budget)


def p_tilde(s: MatrixSet, m: int, rel_tol: float = None, prune: bool = None, budget: int = None) -> PmEnclosure:
    """P̃_m(Σ) = max over 0 <= δ <= D of P_{m+δ}(Σ)."""
    return _merge(m, (p_m(s, m + delta, rel_tol, prune, budget) for delta in range(s.dim + 1)))


def pm_table(s: MatrixSet, m_max: int, rel_tol: float = None, prune: bool = None, budget: int = None) -> PmTable:
    """P_m for m = 1..m_max and P̃_m wherever m + D <= m_max."""
    p = tuple(p_m(s, m, rel_tol, prune, budget) for m in range(1, m_max + 1))
    p_tilde_values = tuple(_merge(m, p[m - 1:m + s.dim]) for m in range(1, m_max - s.dim + 1))
    return PmTable(p=p, p_tilde=p_tilde_values)
