"""Exact B-chromatic index of small graphs by depth-first branch and bound.

Two edges may share a color exactly when they do not conflict, so the search
is a vertex coloring of the conflict graph on the edge set.
"""

from __future__ import annotations

from dataclasses import dataclass

from .conflict import conflict_edges
from .coloring import EdgeColoring
from .graph import Edge, Graph

DEFAULT_BUDGET = 2_000_000


class Infeasible:
    """Marker: no B-coloring with the requested number of colors."""

    def __repr__(self) -> str:
        return "Infeasible"


class BudgetExceeded(Exception):
    """Search node limit hit.  For :func:`exact_qb` the answer lies in ``[lo, hi]``."""

    def __init__(self, lo: int | None = None, hi: int | None = None, nodes: int = 0) -> None:
        msg = "node budget exceeded"
        if lo is not None:
            msg += f"; q_B in [{lo},{hi}]"
        super().__init__(msg)
        self.lo = lo
        self.hi = hi
        self.nodes = nodes


INFEASIBLE = Infeasible()


@dataclass
class _Problem:
    edges: list[Edge]
    # conflicts[i]: indices j < i in search order that conflict with edge i
    earlier: list[list[int]]


def search_order(g: Graph) -> list[Edge]:
    """Most constrained first: descending degree sum, then lexicographic."""
    return sorted(g.edges, key=lambda e: (-(g.degree(e[0]) + g.degree(e[1])), e))


def _problem(g: Graph) -> _Problem:
    edges = search_order(g)
    index = {e: i for i, e in enumerate(edges)}
    earlier = []
    for i, (u, v) in enumerate(edges):
        js = sorted(index[f] for f in conflict_edges(g, u, v).all_edges() if index[f] < i)
        earlier.append(js)
    return _Problem(edges, earlier)


def _search(p: _Problem, k: int, budget: int) -> tuple[list[int] | None, int]:
    """Iterative DFS; returns (colors or None, nodes used).  Raises BudgetExceeded."""
    m = len(p.edges)
    if m == 0:
        return [], 0
    colors = [-1] * m
    # used[i] = number of distinct colors among edges 0..i-1 (colors are 0..used-1)
    used = [0] * (m + 1)
    nodes = 0
    i = 0
    while True:
        # try the next candidate color for edge i, starting after its current one
        limit = min(used[i], k - 1)
        c = colors[i] + 1
        forbidden = {colors[j] for j in p.earlier[i]}
        while c <= limit and c in forbidden:
            c += 1
        if c > limit:
            colors[i] = -1
            i -= 1
            if i < 0:
                return None, nodes
            continue
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(nodes=nodes)
        colors[i] = c
        used[i + 1] = max(used[i], c + 1)
        i += 1
        if i == m:
            return colors, nodes


def feasible(g: Graph, k: int, budget: int = DEFAULT_BUDGET) -> EdgeColoring | Infeasible:
    """A B-coloring with at most ``k`` colors, or :data:`INFEASIBLE`.

    Raises :class:`BudgetExceeded` after ``budget`` search nodes.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    p = _problem(g)
    colors, _ = _search(p, k, budget)
    if colors is None:
        return INFEASIBLE
    return EdgeColoring(k, dict(zip(p.edges, colors)))


def conflict_clique_lower_bound(g: Graph) -> int:
    """Size of a greedily grown set of pairwise conflicting edges."""
    if g.m == 0:
        return 0
    conf = {e: conflict_edges(g, *e).all_edges() for e in g.edges}
    best = 0
    for seed in sorted(g.edges):
        clique = [seed]
        cand = sorted(conf[seed], key=lambda f: (-len(conf[f]), f))
        for f in cand:
            if all(f in conf[x] for x in clique):
                clique.append(f)
        best = max(best, len(clique))
    return best


def first_fit_upper_bound(g: Graph) -> EdgeColoring:
    """First-fit in search order with an unbounded palette; always a B-coloring."""
    p = _problem(g)
    colors: list[int] = []
    for i in range(len(p.edges)):
        forbidden = {colors[j] for j in p.earlier[i]}
        c = 0
        while c in forbidden:
            c += 1
        colors.append(c)
    k = max(colors, default=-1) + 1
    return EdgeColoring(max(k, 1), dict(zip(p.edges, colors)))


@dataclass
class ExactResult:
    value: int
    witness: EdgeColoring
    nodes: int


def solve_exact(g: Graph, budget: int = DEFAULT_BUDGET) -> ExactResult:
    """Smallest ``k`` admitting a B-coloring, with a witness.

    Raises :class:`BudgetExceeded` carrying the bracketing interval.
    """
    if g.m == 0:
        return ExactResult(0, EdgeColoring(1), 0)
    upper = first_fit_upper_bound(g)
    hi = upper.colors_used
    lo = max(g.max_degree(), conflict_clique_lower_bound(g))
    p = _problem(g)
    spent = 0
    for k in range(lo, hi):
        try:
            colors, nodes = _search(p, k, budget - spent)
        except BudgetExceeded as exc:
            raise BudgetExceeded(k, hi, spent + exc.nodes) from None
        spent += nodes
        if colors is not None:
            return ExactResult(k, EdgeColoring(k, dict(zip(p.edges, colors))), spent)
    return ExactResult(hi, upper, spent)


def exact_qb(g: Graph, budget: int = DEFAULT_BUDGET) -> int:
    return solve_exact(g, budget).value


def dsatur_search(
    conf: dict[Edge, frozenset[Edge]], k: int, budget: int = DEFAULT_BUDGET
) -> dict[Edge, int] | None:
    """Backtracking DSATUR over a conflict graph with at most ``k`` colors.

    Returns a coloring, ``None`` when none exists, or raises
    :class:`BudgetExceeded`.  Used when no elimination order fits the palette.
    """
    verts = sorted(conf)
    sat: dict[Edge, dict[int, int]] = {v: {} for v in verts}
    color: dict[Edge, int] = {}

    def pick() -> Edge | None:
        best, best_key = None, None
        for v in verts:
            if v in color:
                continue
            key = (-len(sat[v]), -len(conf[v]), v)
            if best_key is None or key < best_key:
                best, best_key = v, key
        return best

    def assign(v: Edge, c: int) -> None:
        color[v] = c
        for w in conf[v]:
            sat[w][c] = sat[w].get(c, 0) + 1

    def unassign(v: Edge) -> None:
        c = color.pop(v)
        for w in conf[v]:
            if sat[w][c] == 1:
                del sat[w][c]
            else:
                sat[w][c] -= 1

    nodes = 0
    used = 0
    # frame: [vertex, candidate colors, next index, colors used before it]
    frames: list[list] = []
    v = pick()
    while v is not None:
        cands = [c for c in range(min(k, used + 1)) if c not in sat[v]]
        frames.append([v, cands, 0, used])
        while frames:
            f = frames[-1]
            if f[0] in color:
                unassign(f[0])
                used = f[3]
            if f[2] >= len(f[1]):
                frames.pop()
                continue
            c = f[1][f[2]]
            f[2] += 1
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded(nodes=nodes)
            assign(f[0], c)
            used = max(f[3], c + 1)
            break
        else:
            return None
        v = pick()
    return dict(color)
