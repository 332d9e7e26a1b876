"""Tiling a square with similar rectangles, in exact arithmetic."""

from .circuit import (
    Network,
    Solution,
    certificate,
    conjugate_network,
    network_from_dissection,
    resistance_of_dissection,
    solve,
)
from .construct import Decision, cf_tiling, decide, find_cf, grid_tiling, quadratic_tiling, two_block_tiling
from .dissection import Dissection, Rect, read_dissection, similarity, to_svg, validate, write_dissection
from .exactnum import QuadExt, RationalFunction, conjugate, format_number, parse_number, sign
from .polynomial import Poly
from .polystab import all_roots_positive_real_part, evaluate, minimal_polynomial

__all__ = [
    "Decision",
    "Dissection",
    "Network",
    "Poly",
    "QuadExt",
    "RationalFunction",
    "Rect",
    "Solution",
    "all_roots_positive_real_part",
    "certificate",
    "cf_tiling",
    "conjugate",
    "conjugate_network",
    "decide",
    "evaluate",
    "find_cf",
    "format_number",
    "grid_tiling",
    "minimal_polynomial",
    "network_from_dissection",
    "parse_number",
    "quadratic_tiling",
    "read_dissection",
    "resistance_of_dissection",
    "sign",
    "similarity",
    "solve",
    "to_svg",
    "two_block_tiling",
    "validate",
    "write_dissection",
]

__version__ = "0.1.0"
