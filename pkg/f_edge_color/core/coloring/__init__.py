"""Constructing and verifying f-colorings."""

from .base import ColoringReport, FColoring, Violation, verify_coloring
from .euler import euler_orientation, even_f_color
from .extension import ExtensionTier, extend_one_edge, extend_one_edge_traced
from .konig import konig_color
from .search import SearchResult, SearchStatus, search_coloring, search_delta_f_coloring
from .split import SplitGraph, merge_split_coloring, split_instance
from .upper import middle_bound, upper_color_f
from .vizing import vizing_color

__all__ = [
    "ColoringReport",
    "ExtensionTier",
    "FColoring",
    "SearchResult",
    "SearchStatus",
    "SplitGraph",
    "Violation",
    "euler_orientation",
    "even_f_color",
    "extend_one_edge",
    "extend_one_edge_traced",
    "konig_color",
    "merge_split_coloring",
    "middle_bound",
    "search_coloring",
    "search_delta_f_coloring",
    "split_instance",
    "upper_color_f",
    "verify_coloring",
    "vizing_color",
]
