"""B-colorings of planar and outerplanar graphs.

A B-coloring is a proper edge coloring in which every 4-cycle gets four
distinct colors.  Planar graphs of maximum degree ``Delta`` are colored with at
most ``max(2*Delta, 32)`` colors and outerplanar ones with ``max(Delta, 6)``.
"""

__version__ = "0.1.0"

from .conflict import conflict_bound, conflict_colors, conflict_edges
from .coloring import EdgeColoring
from .engine import (
    ColoringResult,
    color,
    color_outerplanar,
    color_planar,
    greedy_assign,
    merge_block_colorings,
)
from .exact import exact_qb, feasible, solve_exact
from .graph import Graph, blocks, build_graph, class_sanity, degeneracy, enumerate_c4
from .reducer import ReductionStep, ReductionTrace, reduce
from .verify import check_conflict_bound, check_structure, verify_b_coloring

__all__ = [
    "ColoringResult",
    "EdgeColoring",
    "Graph",
    "ReductionStep",
    "ReductionTrace",
    "blocks",
    "build_graph",
    "check_conflict_bound",
    "check_structure",
    "class_sanity",
    "color",
    "color_outerplanar",
    "color_planar",
    "conflict_bound",
    "conflict_colors",
    "conflict_edges",
    "degeneracy",
    "enumerate_c4",
    "exact_qb",
    "feasible",
    "greedy_assign",
    "merge_block_colorings",
    "reduce",
    "solve_exact",
    "verify_b_coloring",
]
