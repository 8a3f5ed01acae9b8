from typing import List, Optional

from pydantic import BaseModel

from src.cli.dto.bounds import BestBoundsDTO, BoundRowDTO, CondensationDTO, SetConstantsDTO
from src.cli.dto.growth import GrowthDTO


class RunReport(BaseModel):
    input_digest: str
    arithmetic: str
    certified: bool
    constants: SetConstantsDTO
    condensation: CondensationDTO
    bounds: List[BoundRowDTO] = []
    best: Optional[BestBoundsDTO] = None
    growth: Optional[GrowthDTO] = None
    partial: bool = False
    partial_length: Optional[int] = None
    blondel_reading: str = "m = |Σ|"
