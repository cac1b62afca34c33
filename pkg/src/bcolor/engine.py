"""B-coloring pipelines for planar and outerplanar graphs.

Both pipelines color edges in the reverse of a certified elimination order.
Every assignment is checked against the conflicts of the *input* graph, not
just those of the partially rebuilt one: re-inserting ``uv`` closes 4-cycles
``u-x-y-v`` that make ``ux`` and ``yv`` conflict, and those two edges were
colored while that cycle did not exist yet.  Checking against the full graph
catches the pair when the later of the two is colored, so the output is a
B-coloring whenever the palette does not run out.

Outerplanar graphs are split at the cut vertices of the input; the blocks are
colored on their own and glued by palette permutations.  Inside a block, if
the elimination order runs out of colors, a smallest-last order of the
conflict graph is tried and then a bounded DSATUR search.
"""

from __future__ import annotations

import heapq
import json
import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .coloring import EdgeColoring
from .conflict import conflict_colors, conflict_graph
from .errors import PaletteExhausted, PaletteTooSmall
from .exact import BudgetExceeded, dsatur_search
from .graph import BlockTree, Edge, Graph, block_decomposition, canon, components
from .reducer import (
    ReductionTrace,
    outerplanar_palette,
    planar_palette,
    reduce,
)

log = logging.getLogger(__name__)

SEARCH_BUDGET = 200_000

__all__ = [
    "ColoringResult",
    "EdgeColoring",
    "color",
    "color_outerplanar",
    "color_planar",
    "coloring_from_dict",
    "greedy_assign",
    "merge_block_colorings",
    "rainbow",
    "replay",
]


@dataclass
class ColoringResult:
    coloring: EdgeColoring
    trace: ReductionTrace
    graph_class: str
    # how many pieces were finished by each strategy
    strategies: Counter = field(default_factory=Counter)

    @property
    def palette_size(self) -> int:
        return self.coloring.palette_size

    @property
    def colors_used(self) -> int:
        return self.coloring.colors_used

    @property
    def case_histogram(self) -> dict[str, int]:
        return self.trace.case_histogram()

    def to_dict(self) -> dict:
        return {
            "palette_size": self.palette_size,
            "colors_used": self.colors_used,
            "edges": [
                {"u": u, "v": v, "color": c}
                for (u, v), c in sorted(self.coloring.items())
            ],
            "case_histogram": self.case_histogram,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"


def _first_free(forbidden: set[int], palette_size: int, edge: Edge) -> int:
    for c in range(palette_size):
        if c not in forbidden:
            return c
    raise PaletteExhausted(
        "every palette color conflicts with the edge",
        edge=edge,
        palette_size=palette_size,
        conflict_colors=len(forbidden),
    )


def greedy_assign(g: Graph, col: EdgeColoring, e: Edge) -> int:
    """Give ``e`` the smallest color none of its conflict edges in ``g`` carries."""
    u, v = e
    key = canon(u, v)
    if key in col.assignment:
        raise ValueError(f"edge {key} already colored")
    c = _first_free(conflict_colors(g, col.assignment, u, v), col.palette_size, key)
    col.assignment[key] = c
    return c


def rainbow(edges: Iterable[Edge], palette_size: int) -> EdgeColoring:
    edges = sorted(canon(*e) for e in edges)
    if len(edges) > palette_size:
        raise PaletteTooSmall(
            "more edges than colors", edges=len(edges), palette_size=palette_size
        )
    return EdgeColoring(palette_size, {e: i for i, e in enumerate(edges)})


def _resolve_palette(base: int, palette_override: int | None) -> int:
    if palette_override is None:
        return base
    if palette_override < base:
        raise ValueError(
            f"palette override {palette_override} is below the guaranteed palette {base}"
        )
    return palette_override


def replay(g: Graph, trace: ReductionTrace, palette_size: int) -> EdgeColoring:
    """Color ``trace.base_edges`` then re-insert the deleted edges last-first.

    Base edges get distinct colors when they fit in the palette and
    first-fit colors otherwise.
    """
    if len(trace.base_edges) <= palette_size:
        col = rainbow(trace.base_edges, palette_size)
    else:
        col = EdgeColoring(palette_size)
        for e in trace.base_edges:
            greedy_assign(g, col, e)
    for step in reversed(trace.steps):
        greedy_assign(g, col, step.edge)
    return col


def smallest_last_order(conf: Mapping[Edge, frozenset[Edge]]) -> list[Edge]:
    """Coloring order that puts the edge of least remaining conflict degree last."""
    deg = {e: len(fs) for e, fs in conf.items()}
    heap = [(d, e) for e, d in deg.items()]
    heapq.heapify(heap)
    removed: set[Edge] = set()
    peeled = []
    while heap:
        d, e = heapq.heappop(heap)
        if e in removed or d != deg[e]:
            continue
        removed.add(e)
        peeled.append(e)
        for f in conf[e]:
            if f not in removed:
                deg[f] -= 1
                heapq.heappush(heap, (deg[f], f))
    peeled.reverse()
    return peeled


def _first_fit(conf: Mapping[Edge, frozenset[Edge]], order: list[Edge], k: int) -> EdgeColoring:
    col = EdgeColoring(k)
    a = col.assignment
    for e in order:
        a[e] = _first_free({a[f] for f in conf[e] if f in a}, k, e)
    return col


def _color_piece(
    g: Graph, trace: ReductionTrace, palette_size: int, strategies: Counter,
    search_budget: int,
) -> EdgeColoring:
    try:
        col = replay(g, trace, palette_size)
        strategies["elimination"] += 1
        return col
    except PaletteExhausted as exc:
        first_failure = exc
        log.info("elimination order ran out of colors: %s", exc)
    conf = conflict_graph(g)
    try:
        col = _first_fit(conf, smallest_last_order(conf), palette_size)
        strategies["smallest_last"] += 1
        return col
    except PaletteExhausted:
        log.info("smallest-last order ran out of colors; searching")
    try:
        found = dsatur_search(conf, palette_size, search_budget)
    except BudgetExceeded:
        found = None
    if found is None:
        raise first_failure
    strategies["search"] += 1
    return EdgeColoring(palette_size, found)


def color_planar(
    g: Graph, palette_override: int | None = None, *, search_budget: int = SEARCH_BUDGET
) -> ColoringResult:
    """B-color ``g`` with at most ``max(2*Delta, 32)`` colors (or the override)."""
    delta = g.max_degree()
    palette = _resolve_palette(planar_palette(delta), palette_override)
    trace = reduce(g, "planar", palette, delta_param=delta)
    strategies: Counter = Counter()
    col = _color_piece(g, trace, palette, strategies, search_budget)
    return ColoringResult(col, trace, "planar", strategies)


def merge_block_colorings(
    tree: BlockTree, per_block: list[EdgeColoring], palette_size: int
) -> EdgeColoring:
    """Glue independently colored blocks at their cut vertices.

    Blocks are visited root-first.  Each non-root block is recolored by a
    palette bijection sending its colors at the parent cut vertex onto colors
    still unused there; the remaining colors are matched up in increasing
    order.
    """
    merged = EdgeColoring(palette_size)
    at_vertex: dict[int, set[int]] = {}
    palette = range(palette_size)
    for i in tree.order:
        col = per_block[i]
        cut = tree.parent_cut[i]
        if cut is not None:
            src = sorted({c for e, c in col.items() if cut in e})
            used = at_vertex.get(cut, set())
            free = [c for c in palette if c not in used]
            if len(src) > len(free):
                raise PaletteTooSmall(
                    "cut vertex degree exceeds the palette",
                    cut_vertex=cut,
                    palette_size=palette_size,
                    needed=len(used) + len(src),
                )
            perm = dict(zip(src, free))
            taken = set(free[: len(src)])
            rest_src = [c for c in palette if c not in perm]
            rest_dst = [c for c in palette if c not in taken]
            perm.update(zip(rest_src, rest_dst))
            col = col.permuted(perm)
        for (u, v), c in col.items():
            merged.assignment[(u, v)] = c
            at_vertex.setdefault(u, set()).add(c)
            at_vertex.setdefault(v, set()).add(c)
    return merged


def color_outerplanar(
    g: Graph, palette_override: int | None = None, *, search_budget: int = SEARCH_BUDGET
) -> ColoringResult:
    """B-color ``g`` with at most ``max(Delta, 6)`` colors (or the override)."""
    palette = _resolve_palette(outerplanar_palette(g.max_degree()), palette_override)
    col = EdgeColoring(palette)
    trace = ReductionTrace()
    strategies: Counter = Counter()
    for comp in components(g, include_isolated=False):
        tree = block_decomposition(g, comp[0])
        per_block = []
        for es in tree.block_edges:
            block = Graph._trusted(g.n, sorted(es))
            sub = reduce(block, "outerplanar", palette)
            trace.steps.extend(sub.steps)
            trace.base_edges.extend(sub.base_edges)
            if sub.steps:
                per_block.append(_color_piece(block, sub, palette, strategies, search_budget))
            else:
                per_block.append(rainbow(sub.base_edges, palette))
        col.assignment.update(merge_block_colorings(tree, per_block, palette).assignment)
    trace.base_edges.sort()
    return ColoringResult(col, trace, "outerplanar", strategies)


def color(g: Graph, graph_class: str, palette_override: int | None = None) -> ColoringResult:
    if graph_class == "planar":
        return color_planar(g, palette_override)
    if graph_class == "outerplanar":
        return color_outerplanar(g, palette_override)
    raise ValueError(f"unknown graph class {graph_class!r}")


def coloring_from_dict(data: Mapping) -> EdgeColoring:
    """Inverse of :meth:`ColoringResult.to_dict` (only the coloring part)."""
    palette = int(data["palette_size"])
    col = EdgeColoring(palette)
    for row in data["edges"]:
        u, v, c = int(row["u"]), int(row["v"]), int(row["color"])
        key = canon(u, v)
        if key in col.assignment:
            raise ValueError(f"edge {key} colored twice")
        col[key] = c
    return col
