from typing import List, Optional

from pydantic import BaseModel

from src.core import format_rational, to_decimal
from src.growth import GrowthOrder, GrowthVerification, LambdaEnclosure
from src.cli.dto.bounds import format_number


class ComponentDTO(BaseModel):
    index: int
    vertices: List[int]
    trivial: bool
    critical: bool
    depth: int
    lambda_lower: str
    lambda_upper: str
    lambda_lower_root: str
    lambda_upper_root: str

    @classmethod
    def from_entity(cls, index: int, vertices, trivial: bool, critical: bool, depth: int, lam: LambdaEnclosure):
        return cls(
            index=index,
            vertices=list(vertices),
            trivial=trivial,
            critical=critical,
            depth=depth,
            lambda_lower=str(to_decimal(lam.lo, "down")),
            lambda_upper=str(to_decimal(lam.hi, "up")),
            lambda_lower_root=format_rational(lam.lo),
            lambda_upper_root=format_rational(lam.hi),
        )


class VerificationDTO(BaseModel):
    r: int
    lambda_lower: str
    lambda_upper: str
    n: List[int]
    q: List[str]
    q_at_lower: List[str]
    q_at_upper: List[str]
    alpha: str
    beta: str
    ratio: str
    slope: str

    @classmethod
    def from_entity(cls, entity: GrowthVerification):
        return cls(
            r=entity.r,
            lambda_lower=str(to_decimal(entity.lam.lo, "down")),
            lambda_upper=str(to_decimal(entity.lam.hi, "up")),
            n=list(entity.n_values),
            q=[format_number(q) for q in entity.q_mid],
            q_at_lower=[format_number(q) for q in entity.q_at_lower],
            q_at_upper=[format_number(q) for q in entity.q_at_upper],
            alpha=format_number(entity.alpha),
            beta=format_number(entity.beta),
            ratio=format_number(entity.ratio),
            slope=format_number(entity.slope),
        )


class GrowthDTO(BaseModel):
    r: Optional[int]
    path: List[int]
    witness_chain: List[int]
    lambda_lower: str
    lambda_upper: str
    components: List[ComponentDTO]
    verification: Optional[VerificationDTO] = None
    message: str = ""

    @classmethod
    def from_entity(cls, entity: GrowthOrder, components, verification: Optional[GrowthVerification] = None,
                    message: str = ""):
        return cls(
            r=entity.r,
            path=list(entity.path),
            witness_chain=list(entity.witness_chain),
            lambda_lower=str(to_decimal(entity.lambda_enclosure.lo, "down")),
            lambda_upper=str(to_decimal(entity.lambda_enclosure.hi, "up")),
            components=components,
            verification=VerificationDTO.from_entity(verification) if verification else None,
            message=message,
        )
