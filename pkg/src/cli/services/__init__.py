from .bound_service import BoundOptions, BoundService
from .growth_service import GrowthOptions, GrowthService
from .report_writer import ReportWriter

__all__ = ["BoundOptions", "BoundService", "GrowthOptions", "GrowthService", "ReportWriter"]
