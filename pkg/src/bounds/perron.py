from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

import numpy as np

from src.config import settings
from src.core import Matrix
from src.core.scalar import Number
from src.graph import matrix_graph, scc


@dataclass(frozen=True)
class PerronEnclosure:
    """
    lo <= ρ(M) <= hi.

    `loose` means the iteration cap was hit before the requested relative
    width; the interval is still valid. `certified` is False for float input.
    """

    lo: Number
    hi: Number
    loose: bool = False
    certified: bool = True

    def contains(self, value: Number) -> bool:
        return self.lo <= value <= self.hi


def _collatz_wielandt(block: Matrix, vector: np.ndarray) -> Tuple[Number, Number]:
    if block.is_exact:
        x = [Fraction(float(v)) for v in vector]
    else:
        x = [float(v) for v in vector]

    ratios = [
        sum(block.entries[i][j] * x[j] for j in range(block.dim)) / x[i]
        for i in range(block.dim)
    ]
    return min(ratios), max(ratios)


def _block_radius(block: Matrix, rel_tol: float, max_iterations: int) -> PerronEnclosure:
    if block.dim == 1:
        value = block.entries[0][0]
        return PerronEnclosure(lo=value, hi=value, certified=block.is_exact)

    tiny = np.finfo(np.float64).tiny
    ones = np.ones(block.dim)

    # Powers of B + I share the Perron vector of B and converge even when B is periodic.
    power = block.array.astype(np.float64) + np.eye(block.dim)
    power /= power.max()
    iterations = 1

    lo, hi = _collatz_wielandt(block, ones)
    while hi - lo > rel_tol * hi:
        if iterations >= max_iterations:
            return PerronEnclosure(lo=lo, hi=hi, loose=True, certified=block.is_exact)

        # squaring doubles the number of power steps applied to the all-ones start
        power = power @ power
        power /= power.max()
        iterations *= 2

        vector = power @ ones
        vector = np.maximum(vector / vector.max(), tiny)

        step_lo, step_hi = _collatz_wielandt(block, vector)
        lo, hi = max(lo, step_lo), min(hi, step_hi)

    return PerronEnclosure(lo=lo, hi=hi, certified=block.is_exact)


def spectral_radius(m: Matrix, rel_tol: float = None, max_iterations: int = None) -> PerronEnclosure:
    """
    Certified enclosure of the Perron root of a nonnegative matrix.

    ρ(M) is the maximum over the diagonal blocks of its strongly connected
    components; each block is bracketed by Collatz–Wielandt ratios of a
    positive vector. Trivial components contribute 0.
    """
    rel_tol = rel_tol or settings.rel_tol
    max_iterations = max_iterations or settings.max_iterations

    zero = Fraction(0) if m.is_exact else 0.0
    lo, hi, loose = zero, zero, False

    condensation = scc(matrix_graph(m))
    for members, trivial in zip(condensation.components, condensation.trivial):
        if trivial:
            continue

        enclosure = _block_radius(m.restrict(members), rel_tol, max_iterations)
        lo, hi = max(lo, enclosure.lo), max(hi, enclosure.hi)
        loose = loose or enclosure.loose

    return PerronEnclosure(lo=lo, hi=hi, loose=loose, certified=m.is_exact)
