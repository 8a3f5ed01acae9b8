import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

import networkx as nx
import numpy as np

from src.config import settings
from src.core import MatrixSet
from src.exceptions import ConstantsUndefinedError, EnclosureTooWideError, OutOfRangeError
from src.graph import Condensation
from src.growth.classification import ComponentClassification, LambdaEnclosure
from src.products import NormTable


@dataclass(frozen=True)
class GrowthOrder:
    """
    ‖Σⁿ‖ ≍ nʳ λⁿ.

    `path` is the condensation path realizing r, `witness_chain` its critical
    members in path order. r is an upper estimate: a component that merely
    could not be certified below λ still counts as critical.
    """

    lambda_enclosure: LambdaEnclosure
    r: int
    path: Tuple[int, ...]
    witness_chain: Tuple[int, ...]
    classification: ComponentClassification


@dataclass(frozen=True)
class GrowthVerification:
    r: int
    lam: LambdaEnclosure
    n_values: Tuple[int, ...]
    q_mid: Tuple[float, ...]
    q_at_lower: Tuple[float, ...]
    q_at_upper: Tuple[float, ...]
    alpha: float
    beta: float
    slope: float

    @property
    def ratio(self) -> float:
        return self.beta / self.alpha if self.alpha > 0 else math.inf


def growth_exponent(cond: Condensation, cls: ComponentClassification, s: MatrixSet) -> GrowthOrder:
    """
    Longest chain of critical components in the condensation DAG, minus one.

    Weight of a path is its number of critical components; among the heaviest
    paths the one with the lexicographically smallest chain is reported, then
    the lexicographically smallest path.
    """
    if s.all_zero:
        raise ConstantsUndefinedError("growth order is undefined for a set of zero matrices")

    # per node: (-weight, chain, path) of the best path starting there, smaller is better
    best: dict[int, Tuple[int, Tuple[int, ...], Tuple[int, ...]]] = {}

    for node in reversed(list(nx.topological_sort(cond.to_networkx()))):
        tail = min([(0, (), ())] + [best[successor] for successor in cond.successors(node)])
        head = (node,) if cls.critical[node] else ()
        best[node] = (tail[0] - len(head), head + tail[1], (node,) + tail[2])

    # start from critical components so the path begins and ends on one
    starts = [node for node in range(cond.size) if cls.critical[node]]
    negative_weight, chain, path = min(best[node] for node in starts)

    return GrowthOrder(
        lambda_enclosure=cls.lambda_enclosure(),
        r=-negative_weight - 1,
        path=path,
        witness_chain=chain,
        classification=cls,
    )


def _slope(n_values, q_values) -> float:
    points = [(math.log(n), math.log(q)) for n, q in zip(n_values, q_values) if q > 0]
    if len(points) < 2:
        return 0.0
    x, y = zip(*points)
    return float(np.polyfit(x, y, 1)[0])


def _q(norm, n: int, r: int, lam: Fraction) -> float:
    return float(Fraction(norm) / (Fraction(n) ** r * lam ** n))


def verify_growth(s: MatrixSet, t: NormTable, g: GrowthOrder, n_lo: int, n_hi: int, r: Optional[int] = None,
                  lam: Optional[LambdaEnclosure] = None, max_relative_width: float = None) -> GrowthVerification:
    """
    Empirical check of const·nʳλⁿ <= ‖Σⁿ‖ <= const·nʳλⁿ.

    q_n = ‖Σⁿ‖ / (nʳ λ_midⁿ) should stay bounded with a ln q_n vs ln n slope
    near 0; a slope near ±1 means r is off by one. `r` and `lam` override
    the values in `g`, e.g. for negative controls or a sharper λ enclosure.
    """
    r = g.r if r is None else r
    lam = lam or g.lambda_enclosure
    max_relative_width = max_relative_width or settings.lambda_max_relative_width

    if not 1 <= n_lo <= n_hi <= t.n_max:
        raise OutOfRangeError(f"need 1 <= n_lo <= n_hi <= {t.n_max}, got [{n_lo}, {n_hi}]")
    if lam.lo <= 0:
        raise EnclosureTooWideError("λ lower bound is 0, growth cannot be verified")
    if lam.relative_width > max_relative_width:
        raise EnclosureTooWideError(
            f"λ enclosure [{float(lam.lo)}, {float(lam.hi)}] has relative width {lam.relative_width:.3g} "
            f"> {max_relative_width}, raise the classification depth"
        )

    n_values = tuple(range(n_lo, n_hi + 1))
    q_mid = tuple(_q(t.norm(n), n, r, lam.midpoint) for n in n_values)

    return GrowthVerification(
        r=r,
        lam=lam,
        n_values=n_values,
        q_mid=q_mid,
        q_at_lower=tuple(_q(t.norm(n), n, r, lam.lo) for n in n_values),
        q_at_upper=tuple(_q(t.norm(n), n, r, lam.hi) for n in n_values),
        alpha=min(q_mid),
        beta=max(q_mid),
        slope=_slope(n_values, q_mid),
    )
