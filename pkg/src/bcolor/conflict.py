"""Edges and colors that conflict with a (present or pending) edge ``uv``.

An edge conflicts with ``uv`` when it shares an endpoint with it or closes a
4-cycle together with it.  Two edges may receive the same color in a
B-coloring exactly when they do not conflict.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .errors import SameVertex
from .graph import Edge, Graph, canon


@dataclass(frozen=True)
class ConflictSet:
    incident_u: frozenset[Edge]
    incident_v: frozenset[Edge]
    cross: frozenset[Edge]

    @property
    def total(self) -> int:
        return len(self.incident_u) + len(self.incident_v) + len(self.cross)

    def __len__(self) -> int:
        return self.total

    def all_edges(self) -> frozenset[Edge]:
        return self.incident_u | self.incident_v | self.cross


def _cross_edges(g: Graph, u: int, v: int) -> set[Edge]:
    nu = g.neighbors(u) - {v}
    nv = g.neighbors(v) - {u}
    cross: set[Edge] = set()
    # iterate from the smaller side; each x in N(u) pairs with its neighbours in N(v)
    if len(nu) <= len(nv):
        for x in nu:
            for y in g.neighbors(x) & nv:
                cross.add(canon(x, y))
    else:
        for y in nv:
            for x in g.neighbors(y) & nu:
                cross.add(canon(x, y))
    return cross


def conflict_edges(g: Graph, u: int, v: int) -> ConflictSet:
    """Partition of the edges conflicting with ``uv``.

    ``uv`` need not be present in ``g``; it is never part of the result.
    """
    if u == v:
        raise SameVertex(f"u == v == {u}")
    inc_u = frozenset(canon(u, x) for x in g.neighbors(u) if x != v)
    inc_v = frozenset(canon(v, y) for y in g.neighbors(v) if y != u)
    return ConflictSet(inc_u, inc_v, frozenset(_cross_edges(g, u, v)))


def conflict_count(g: Graph, u: int, v: int) -> int:
    if u == v:
        raise SameVertex(f"u == v == {u}")
    du = len(g.neighbors(u)) - (1 if v in g.neighbors(u) else 0)
    dv = len(g.neighbors(v)) - (1 if u in g.neighbors(v) else 0)
    return du + dv + len(_cross_edges(g, u, v))


def conflict_colors(
    g: Graph, coloring: Mapping[Edge, int], u: int, v: int
) -> set[int]:
    """Colors already carried by edges conflicting with ``uv``."""
    if u == v:
        raise SameVertex(f"u == v == {u}")
    colors: set[int] = set()
    get = coloring.get
    nu = g.neighbors(u)
    nv = g.neighbors(v)
    for x in nu:
        if x != v:
            c = get(canon(u, x))
            if c is not None:
                colors.add(c)
    for y in nv:
        if y != u:
            c = get(canon(v, y))
            if c is not None:
                colors.add(c)
    for x in nu:
        if x == v:
            continue
        for y in g.neighbors(x):
            if y != u and y in nv:
                c = get(canon(x, y))
                if c is not None:
                    colors.add(c)
    return colors


def conflict_bound(du: int, dv: int) -> int:
    """Upper bound on the conflicts of an edge of a planar graph whose
    endpoints have degrees ``du`` and ``dv``."""
    if du < 1 or dv < 1:
        raise ValueError("degrees must be at least 1")
    return 2 * du + 2 * dv + min(du, dv) // 2 - 6


def conflict_graph(g: Graph) -> dict[Edge, frozenset[Edge]]:
    """Every edge mapped to the edges it conflicts with.  A B-coloring of
    ``g`` is exactly a proper vertex coloring of this graph."""
    return {e: conflict_edges(g, *e).all_edges() for e in g.edge_list()}
