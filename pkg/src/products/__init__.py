from .frontier import Frontier, enumerate_frontiers, frontier_at, prune_dominated
from .norm_table import NormTable, norm_table, max_component_norm
from .entry_range import EntryRangeReport, entry_range_check

__all__ = ["Frontier", "enumerate_frontiers", "frontier_at", "prune_dominated", "NormTable", "norm_table",
           "max_component_norm", "EntryRangeReport", "entry_range_check"]
