from .bounds import BoundRowDTO, BestBoundsDTO, SetConstantsDTO, CondensationDTO, format_number
from .growth import ComponentDTO, VerificationDTO, GrowthDTO
from .report import RunReport

__all__ = ["BoundRowDTO", "BestBoundsDTO", "SetConstantsDTO", "CondensationDTO", "format_number", "ComponentDTO",
           "VerificationDTO", "GrowthDTO", "RunReport"]
