"""Edge-elimination orderings behind the two coloring pipelines.

Each pipeline deletes edges one at a time, choosing an edge whose number of
conflicts is certified to stay below the palette size; colouring the graph
without that edge and then giving the edge a free color proves the bound by
induction.  The selection rules live here, together with the trace types the
engine replays.

Planar graphs use a flat elimination order.  Outerplanar graphs need the
block structure as well (a block is colored on its own and then glued at its
cut vertex by a palette permutation), so their reduction is a plan tree that
:func:`reduce` flattens into a trace.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator

from .conflict import conflict_count, conflict_edges
from .errors import NotFound, StructureViolation
from .graph import (
    BlockTree,
    Edge,
    Graph,
    block_decomposition,
    canon,
    components,
)

OUTER_CYCLE = "OuterCycle"
OUTER_DEG2 = "OuterDeg2"
PLANAR_DELTA12 = "PlanarDelta12"
PLANAR_DELTA3_SMALL = "PlanarDelta3Small"
PLANAR_DELTA3_MAXNBR = "PlanarDelta3MaxNbr"
PLANAR_SMALL_DEGSUM = "PlanarSmallDegSum"

CASE_TAGS = (
    OUTER_CYCLE,
    OUTER_DEG2,
    PLANAR_DELTA12,
    PLANAR_DELTA3_SMALL,
    PLANAR_DELTA3_MAXNBR,
    PLANAR_SMALL_DEGSUM,
)

# conflicts of an edge xy with 4 <= deg x <= 5, deg y <= 9 in a planar graph
SMALL_DEGSUM_BUDGET = 24
# Delta threshold at which a degree-3 vertex next to max-degree vertices no
# longer fits in the fixed palette of 32
DELTA3_MAXNBR_LIMIT = 15


def outerplanar_palette(delta: int) -> int:
    return max(delta, 6)


def planar_palette(delta: int) -> int:
    return max(2 * delta, 32)


@dataclass(frozen=True)
class ReductionStep:
    """One deleted edge.  ``edge`` is oriented ``(u, v)`` with ``u`` the
    endpoint whose low degree justified the choice."""

    edge: tuple[int, int]
    case_tag: str
    budget: int

    @property
    def key(self) -> Edge:
        return canon(*self.edge)


@dataclass
class ReductionTrace:
    steps: list[ReductionStep] = field(default_factory=list)
    base_edges: list[Edge] = field(default_factory=list)

    def case_histogram(self) -> dict[str, int]:
        counts = Counter(s.case_tag for s in self.steps)
        return {tag: counts.get(tag, 0) for tag in CASE_TAGS}

    def to_text(self) -> str:
        return "".join(f"{s.edge[0]} {s.edge[1]} {s.case_tag}\n" for s in self.steps)

    def __len__(self) -> int:
        return len(self.steps)


def parse_trace_text(text: str) -> list[tuple[int, int, str]]:
    rows = []
    for line in text.splitlines():
        if not line.strip():
            continue
        u, v, tag = line.split()
        if tag not in CASE_TAGS:
            raise ValueError(f"unknown case tag {tag!r}")
        rows.append((int(u), int(v), tag))
    return rows


# -- outerplanar selection --------------------------------------------------


def _is_cycle(g: Graph) -> bool:
    return all(d in (0, 2) for d in g.degrees()) and g.m > 0


def select_edge_outerplanar(g: Graph) -> ReductionStep:
    """Edge to delete from a 2-connected outerplanar graph.

    A cycle gives up its smallest edge.  Otherwise a degree-2 vertex ``u``
    next to a vertex ``v`` of degree at most 4 must exist, and ``uv`` has at
    most ``(deg u - 1) + (deg v - 1) + 1`` conflicts.
    """
    deg = g.degrees()
    if _is_cycle(g):
        u, v = g.edge_list()[0]
        return ReductionStep((u, v), OUTER_CYCLE, (deg[u] - 1) + (deg[v] - 1) + 1)
    best: tuple[int, int, int] | None = None
    for u in range(g.n):
        if deg[u] != 2:
            continue
        for v in g.neighbors(u):
            if deg[v] <= 4:
                cand = (deg[v], u, v)
                if best is None or cand < best:
                    best = cand
    if best is None:
        raise StructureViolation(
            "no degree-2 vertex adjacent to a vertex of degree <= 4; "
            "graph is not a 2-connected outerplanar graph",
            min_degree=g.min_degree(ignore_isolated=True),
            max_degree=g.max_degree(),
            n=g.n,
            m=g.m,
        )
    dv, u, v = best
    return ReductionStep((u, v), OUTER_DEG2, (2 - 1) + (dv - 1) + 1)


# -- planar selection -------------------------------------------------------


def find_small_degsum_vertex(g: Graph) -> tuple[int, int]:
    """A vertex ``x`` of degree 4 or 5 and a neighbour ``y`` of degree at most 9.

    Minimises ``(deg x, deg y, x, y)``.  Guaranteed to exist for planar graphs
    with minimum degree at least 4, and for planar graphs of minimum degree 3
    in which every degree-3 vertex only sees vertices of the maximum degree
    ``Delta >= 16``.
    """
    deg = g.degrees()
    best: tuple[int, int, int, int] | None = None
    for x in range(g.n):
        if deg[x] not in (4, 5):
            continue
        for y in g.neighbors(x):
            if deg[y] <= 9:
                cand = (deg[x], deg[y], x, y)
                if best is None or cand < best:
                    best = cand
    if best is None:
        raise NotFound(
            "no vertex of degree 4-5 has a neighbour of degree <= 9",
            min_degree=g.min_degree(ignore_isolated=True),
            max_degree=g.max_degree(),
            n=g.n,
            m=g.m,
        )
    return best[2], best[3]


def _min_edge_at(g: Graph, us: list[int], ok) -> tuple[int, int] | None:
    for u in us:
        vs = [v for v in g.neighbors(u) if ok(v)]
        if vs:
            return u, min(vs)
    return None


def select_edge_planar(g: Graph, delta_param: int) -> ReductionStep:
    """Edge to delete from a planar graph whose maximum degree is at most
    ``delta_param``, dispatching on the current minimum degree."""
    if g.m == 0:
        raise ValueError("graph has no edges")
    if g.max_degree() > delta_param:
        raise ValueError(
            f"max degree {g.max_degree()} exceeds delta_param {delta_param}"
        )
    deg = g.degrees()
    delta_min = min(d for d in deg if d > 0)
    low = [u for u in range(g.n) if deg[u] == delta_min]

    if delta_min <= 2:
        u, v = _min_edge_at(g, low, lambda v: True)
        return ReductionStep((u, v), PLANAR_DELTA12, 2 * delta_param - 1)

    if delta_min == 3:
        hit = _min_edge_at(g, low, lambda v: deg[v] <= delta_param - 1)
        if hit is not None:
            return ReductionStep(hit, PLANAR_DELTA3_SMALL, 2 * delta_param - 1)
        if delta_param <= DELTA3_MAXNBR_LIMIT:
            u, v = _min_edge_at(g, low, lambda v: True)
            return ReductionStep((u, v), PLANAR_DELTA3_MAXNBR, 2 * delta_param + 1)

    if delta_min <= 5:
        x, y = find_small_degsum_vertex(g)
        return ReductionStep((x, y), PLANAR_SMALL_DEGSUM, SMALL_DEGSUM_BUDGET)

    raise StructureViolation(
        "minimum degree is at least 6; graph is not planar",
        min_degree=delta_min,
        max_degree=g.max_degree(),
        witness=low[0],
    )


# -- outerplanar plan tree --------------------------------------------------


@dataclass
class PlanNode:
    """Node of an outerplanar reduction plan.

    ``kind`` is ``"rainbow"`` (``edges`` get pairwise distinct colors),
    ``"components"`` or ``"blocks"`` (children colored independently; blocks
    are glued along ``tree``), or ``"delete"`` (``step.edge`` removed, single
    child, ``conflicts`` lists the edges it conflicts with).
    """

    kind: str = ""
    edges: list[Edge] = field(default_factory=list)
    tree: BlockTree | None = None
    step: ReductionStep | None = None
    conflicts: frozenset[Edge] = frozenset()
    children: list[PlanNode] = field(default_factory=list)

    def walk(self) -> Iterator[PlanNode]:
        """Pre-order traversal (deletions come out in deletion order)."""
        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))


def _expand(
    node: PlanNode, g: Graph, palette_size: int, connected: bool
) -> list[tuple[PlanNode, Graph, bool]]:
    if g.m <= palette_size:
        node.kind = "rainbow"
        node.edges = g.edge_list()
        return []
    if connected:
        comps = [[next(iter(g._edges))[0]]]
    else:
        comps = components(g, include_isolated=False)
    if len(comps) > 1:
        node.kind = "components"
        out = []
        for comp in comps:
            members = set(comp)
            sub = Graph._trusted(g.n, sorted(e for e in g._edges if e[0] in members))
            child = PlanNode()
            node.children.append(child)
            out.append((child, sub, True))
        return out
    tree = block_decomposition(g, comps[0][0])
    if len(tree) > 1:
        node.kind = "blocks"
        node.tree = tree
        out = []
        for es in tree.block_edges:
            child = PlanNode()
            node.children.append(child)
            out.append((child, Graph._trusted(g.n, sorted(es)), True))
        return out
    step = select_edge_outerplanar(g)
    u, v = step.edge
    cs = conflict_edges(g, u, v)
    if cs.total > step.budget:
        raise StructureViolation(
            "selected edge exceeds its conflict budget; graph is not outerplanar",
            edge=step.edge,
            conflicts=cs.total,
            budget=step.budget,
        )
    node.kind = "delete"
    node.step = step
    node.conflicts = cs.all_edges()
    g.remove_edge(u, v)
    child = PlanNode()
    node.children.append(child)
    # removing an edge of a block may disconnect nothing but can split blocks
    return [(child, g, True)]


def plan_outerplanar(g: Graph, palette_size: int) -> PlanNode:
    """Build the outerplanar reduction plan for ``g`` (not modified)."""
    root = PlanNode()
    work = [(root, g.copy(), False)]
    while work:
        node, sub, connected = work.pop()
        work.extend(reversed(_expand(node, sub, palette_size, connected)))
    return root


def trace_from_plan(root: PlanNode) -> ReductionTrace:
    trace = ReductionTrace()
    for node in root.walk():
        if node.kind == "delete":
            trace.steps.append(node.step)
        elif node.kind == "rainbow":
            trace.base_edges.extend(node.edges)
    trace.base_edges.sort()
    return trace


# -- reduce -----------------------------------------------------------------


def _reduce_planar(g: Graph, palette_size: int, delta_param: int) -> ReductionTrace:
    work = g.copy()
    trace = ReductionTrace()
    while work.m > palette_size:
        step = select_edge_planar(work, delta_param)
        u, v = step.edge
        count = conflict_count(work, u, v)
        if count > step.budget:
            raise StructureViolation(
                "selected edge exceeds its conflict budget; graph is not planar",
                edge=step.edge,
                case=step.case_tag,
                conflicts=count,
                budget=step.budget,
                min_degree=work.min_degree(ignore_isolated=True),
                max_degree=work.max_degree(),
            )
        work.remove_edge(u, v)
        trace.steps.append(step)
    trace.base_edges = work.edge_list()
    return trace


def reduce(
    g: Graph,
    graph_class: str,
    palette_size: int,
    delta_param: int | None = None,
) -> ReductionTrace:
    """Delete certified edges until at most ``palette_size`` edges remain.

    For planar input this is a single elimination order and ``base_edges`` is
    what is left.  Outerplanar input is split into components and blocks
    whenever it stops being 2-connected; ``base_edges`` is then the union of
    the pieces small enough to rainbow-color.
    """
    if graph_class == "planar":
        if delta_param is None:
            delta_param = g.max_degree()
        return _reduce_planar(g, palette_size, delta_param)
    if graph_class == "outerplanar":
        return trace_from_plan(plan_outerplanar(g, palette_size))
    raise ValueError(f"unknown graph class {graph_class!r}")
