"""Checks for B-colorings and for the structural facts the pipelines rely on."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Mapping

from .conflict import conflict_bound, conflict_count, conflict_edges
from .errors import PartialColoring
from .graph import (
    Check,
    CheckReport,
    Edge,
    FourCycle,
    Graph,
    block_decomposition,
    class_sanity,
    components,
    enumerate_c4,
)


@dataclass
class VerificationReport:
    proper_violations: list[tuple[int, Edge, Edge]] = field(default_factory=list)
    rainbow_violations: list[tuple[FourCycle, list[int]]] = field(default_factory=list)
    colors_used: int = 0

    @property
    def ok(self) -> bool:
        return not self.proper_violations and not self.rainbow_violations

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "colors_used": self.colors_used,
            "proper_violations": [
                {"vertex": x, "edges": [list(e), list(f)]}
                for x, e, f in self.proper_violations
            ],
            "rainbow_violations": [
                {"cycle": list(cyc), "repeated_colors": cols}
                for cyc, cols in self.rainbow_violations
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"


def _assignment(col) -> Mapping[Edge, int]:
    return getattr(col, "assignment", col)


def verify_b_coloring(g: Graph, col) -> VerificationReport:
    """Report every adjacent same-colored pair and every non-rainbow 4-cycle."""
    colors = _assignment(col)
    missing = [e for e in g.edge_list() if e not in colors]
    if missing:
        raise PartialColoring(f"{len(missing)} edges uncolored, first {missing[0]}")
    report = VerificationReport(colors_used=len({colors[e] for e in g.edges}))
    for x in range(g.n):
        seen: dict[int, Edge] = {}
        for y in g.sorted_neighbors(x):
            e = (x, y) if x < y else (y, x)
            c = colors[e]
            if c in seen:
                report.proper_violations.append((x, seen[c], e))
            else:
                seen[c] = e
    for cyc in enumerate_c4(g):
        cs = [colors[e] for e in cyc.edges]
        if len(set(cs)) < 4:
            repeated = sorted({c for c in cs if cs.count(c) > 1})
            report.rainbow_violations.append((cyc, repeated))
    return report


@dataclass(frozen=True)
class BoundViolation:
    edge: Edge
    conflicts: int
    bound: int


def proven_conflict_bound(du: int, dv: int) -> int:
    """Conflict bound valid for every edge of a connected planar graph other
    than ``K_2``.

    For ``min(du, dv) >= 2`` this is :func:`conflict_bound`.  A pendant edge
    has no common neighbours, and the sharper closed form undercounts it when
    the other endpoint has degree 2 (a path on three vertices has one
    conflict against a bound of 0); there the ``2du + 2dv - 5`` count for
    edges without common neighbours applies.
    """
    if min(du, dv) == 1:
        return 2 * du + 2 * dv - 5
    return conflict_bound(du, dv)


def check_conflict_bound(g: Graph, *, strict: bool = False) -> list[BoundViolation]:
    """Edges with more conflicts than the planar bound allows.

    Components that are a single edge are skipped.  With ``strict=True``
    pendant edges are held to the plain closed form as well.
    """
    bound_fn = conflict_bound if strict else proven_conflict_bound
    out = []
    for u, v in g.edge_list():
        du, dv = g.degree(u), g.degree(v)
        if du == 1 and dv == 1:
            continue
        count = conflict_count(g, u, v)
        bound = bound_fn(du, dv)
        if count > bound:
            out.append(BoundViolation((u, v), count, bound))
    return out


def is_bipartite(g: Graph, vertices: list[int]) -> bool:
    side: dict[int, int] = {}
    for s in vertices:
        if s in side:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            x = stack.pop()
            for y in g.neighbors(x):
                if y not in side:
                    side[y] = 1 - side[x]
                    stack.append(y)
                elif side[y] == side[x]:
                    return False
    return True


def outerplanar_block_witness(g: Graph) -> tuple[str, int, list[int]] | None:
    """Witness for the degree structure every 2-connected outerplanar graph has.

    Returns ``("cycle", v, [])``, ``("deg3", v, [w])`` for a degree-3 vertex
    with a degree-2 neighbour, ``("deg4", v, [w1, w2])`` for a degree-4 vertex
    with two degree-2 neighbours, or ``None``.
    """
    deg = g.degrees()
    if all(d in (0, 2) for d in deg):
        return ("cycle", min(v for v in range(g.n) if deg[v]), [])
    twos = [sorted(w for w in g.neighbors(v) if deg[w] == 2) for v in range(g.n)]
    for v in range(g.n):
        if deg[v] == 3 and twos[v]:
            return ("deg3", v, twos[v][:1])
    for v in range(g.n):
        if deg[v] == 4 and len(twos[v]) >= 2:
            return ("deg4", v, twos[v][:2])
    return None


def small_degsum_precondition(g: Graph) -> bool:
    """Whether a vertex of degree 4-5 with a neighbour of degree <= 9 is
    guaranteed for planar ``g``."""
    deg = g.degrees()
    present = [d for d in deg if d > 0]
    if not present:
        return False
    lo, hi = min(present), max(present)
    if lo >= 4:
        return True
    if lo == 3 and hi >= 16:
        return all(
            deg[w] == hi for v in range(g.n) if deg[v] == 3 for w in g.neighbors(v)
        )
    return False


def small_degsum_witness(g: Graph) -> tuple[int, int] | None:
    deg = g.degrees()
    for x in range(g.n):
        if deg[x] in (4, 5):
            for y in sorted(g.neighbors(x)):
                if deg[y] <= 9:
                    return x, y
    return None


def check_structure(g: Graph, graph_class: str) -> CheckReport:
    """Necessary structural facts for ``graph_class``, per component, with witnesses."""
    report = class_sanity(g, graph_class)
    comps = components(g, include_isolated=False)
    deg = g.degrees()
    if graph_class == "planar":
        for comp in comps:
            members = set(comp)
            e = sum(1 for u, v in g.edges if u in members)
            if len(comp) >= 3 and is_bipartite(g, comp):
                bound = 2 * len(comp) - 4
                report.checks.append(
                    Check(f"bipartite_edge_bound[component {comp[0]}]", e <= bound,
                          f"e={e} bound={bound}")
                )
        present = [d for d in deg if d > 0]
        if present:
            d = min(present)
            report.checks.append(Check("min_degree_at_most_5", d <= 5, f"min_degree={d}"))
        if small_degsum_precondition(g):
            w = small_degsum_witness(g)
            report.checks.append(
                Check("small_degree_sum_edge", w is not None,
                      f"witness={list(w)}" if w else "no witness")
            )
        return report

    for comp in comps:
        low = [v for v in comp if deg[v] <= 2]
        report.checks.append(
            Check(f"two_vertices_deg_le_2[component {comp[0]}]", len(low) >= 2 or len(comp) < 2,
                  f"vertices={low[:2]}")
        )
        tree = block_decomposition(g, comp[0])
        for es in tree.block_edges:
            if len(es) < 3:
                continue
            block = Graph(g.n, es)
            w = outerplanar_block_witness(block)
            label = f"block_degree_structure[block {min(min(e) for e in es)}]"
            if w is None:
                report.checks.append(Check(label, False, "no cycle/deg3/deg4 witness"))
            else:
                kind, v, nbrs = w
                report.checks.append(Check(label, True, f"{kind} at {v} with {nbrs}"))
    return report


def cross_edge_count(g: Graph, u: int, v: int) -> int:
    return len(conflict_edges(g, u, v).cross)
