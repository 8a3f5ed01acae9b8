from .roots import RootEnclosure, nth_root_enclosure
from .perron import PerronEnclosure, spectral_radius
from .intervals import BoundInterval, BoundMethod, make_interval, zero_interval
from .pm import PmEnclosure, PmTable, p_m, p_tilde, pm_table
from .methods import main_bounds, connected_bounds, traditional_bounds, blondel_nesterov_bounds
from .best import BestBounds, ALL_METHODS, best_bounds, collect_intervals, intersect

__all__ = ["RootEnclosure", "nth_root_enclosure", "PerronEnclosure", "spectral_radius", "BoundInterval",
           "BoundMethod", "make_interval", "zero_interval", "PmEnclosure", "PmTable", "p_m", "p_tilde", "pm_table",
           "main_bounds", "connected_bounds", "traditional_bounds", "blondel_nesterov_bounds", "BestBounds",
           "ALL_METHODS", "best_bounds", "collect_intervals", "intersect"]
