from typing import List, Optional

from pydantic import BaseModel

from src.bounds import BestBounds, BoundInterval
from src.core import MatrixSet, format_rational, set_constants
from src.graph import Condensation


def format_number(value) -> str:
    """Nearest rounding to 15 significant digits; only for values that are not certified endpoints."""
    return f"{float(value):.15g}"


class BoundRowDTO(BaseModel):
    method: str
    n: int
    lower: str
    lower_rounding: str = "down"
    upper: str
    upper_rounding: str = "up"
    width_n: str
    ratio: str
    lower_radicand: str
    upper_radicand: str
    certified: bool
    loose: bool
    note: str

    @classmethod
    def from_entity(cls, entity: BoundInterval):
        return cls(
            method=entity.method.value,
            n=entity.n,
            lower=str(entity.lower),
            upper=str(entity.upper),
            width_n=format_number((entity.upper_root - entity.lower_root) * entity.n),
            ratio=format_number(entity.ratio),
            lower_radicand=format_rational(entity.lower_radicand),
            upper_radicand=format_rational(entity.upper_radicand),
            certified=entity.certified,
            loose=entity.loose,
            note=entity.note,
        )

    @classmethod
    def skipped(cls, method: str, note: str):
        """A row without numbers for a requested method that does not apply to the set."""
        return cls(method=method, n=0, lower="", upper="", width_n="", ratio="", lower_radicand="",
                   upper_radicand="", certified=False, loose=False, note=note)


class BestBoundsDTO(BaseModel):
    lower: str
    upper: str
    lower_root: str
    upper_root: str
    lower_source: str
    upper_source: str
    certified: bool

    @classmethod
    def from_entity(cls, entity: BestBounds):
        return cls(
            lower=str(entity.lower),
            upper=str(entity.upper),
            lower_root=format_rational(entity.lower_root),
            upper_root=format_rational(entity.upper_root),
            lower_source=f"{entity.lower_source[0].value}@{entity.lower_source[1]}",
            upper_source=f"{entity.upper_source[0].value}@{entity.upper_source[1]}",
            certified=entity.certified,
        )


class SetConstantsDTO(BaseModel):
    dimension: int
    size: int
    all_zero: bool
    U: Optional[str] = None
    V: Optional[str] = None
    K: Optional[str] = None

    @classmethod
    def from_entity(cls, entity: MatrixSet):
        if entity.all_zero:
            return cls(dimension=entity.dim, size=entity.size, all_zero=True)

        constants = set_constants(entity)
        return cls(
            dimension=entity.dim,
            size=entity.size,
            all_zero=False,
            U=format_rational(constants.U),
            V=format_rational(constants.V),
            K=format_rational(constants.K),
        )


class CondensationDTO(BaseModel):
    components: List[List[int]]
    trivial: List[bool]
    dag_edges: List[List[int]]
    strongly_connected: bool

    @classmethod
    def from_entity(cls, entity: Condensation):
        return cls(
            components=[list(c) for c in entity.components],
            trivial=list(entity.trivial),
            dag_edges=[list(e) for e in entity.dag_edges],
            strongly_connected=entity.is_strongly_connected,
        )
