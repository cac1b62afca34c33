"""Simple undirected graphs on dense integer vertex ids.

Vertices are ``0..n-1``; an edge is the canonical tuple ``(min, max)``.
Besides the container this module holds the structural queries the coloring
pipelines rely on: 4-cycle enumeration, connected components, block
decomposition, degeneracy and the necessary-condition class checks, plus the
DIMACS-style text format.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Literal, NamedTuple

from .errors import (
    Disconnected,
    DuplicateEdge,
    EdgeNotFound,
    InvalidVertexId,
    ParseError,
    SelfLoop,
)

Edge = tuple[int, int]
GraphClass = Literal["planar", "outerplanar"]
GRAPH_CLASSES: tuple[str, ...] = ("planar", "outerplanar")


def canon(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Mutable simple graph with vertex ids ``0..n-1``.

    Mutation only happens through :meth:`add_edge` / :meth:`remove_edge`;
    callers that need an untouched original take a :meth:`copy` first.
    """

    __slots__ = ("n", "_adj", "_edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if n < 0:
            raise InvalidVertexId(f"vertex count must be non-negative, got {n}")
        self.n = n
        self._adj: list[set[int]] = [set() for _ in range(n)]
        self._edges: set[Edge] = set()
        for u, v in edges:
            self.add_edge(u, v)

    @classmethod
    def _trusted(cls, n: int, edges: Iterable[Edge]) -> Graph:
        """Build from canonical, valid, distinct edges without checks."""
        g = cls(n)
        adj, es = g._adj, g._edges
        for u, v in edges:
            adj[u].add(v)
            adj[v].add(u)
            es.add((u, v))
        return g

    # -- basic queries -------------------------------------------------

    @property
    def edges(self) -> frozenset[Edge]:
        return frozenset(self._edges)

    def edge_list(self) -> list[Edge]:
        """Edges in sorted canonical order."""
        return sorted(self._edges)

    @property
    def m(self) -> int:
        return len(self._edges)

    def __len__(self) -> int:
        return self.n

    def neighbors(self, v: int) -> set[int]:
        return self._adj[v]

    def sorted_neighbors(self, v: int) -> list[int]:
        return sorted(self._adj[v])

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self._adj]

    def max_degree(self) -> int:
        return max((len(a) for a in self._adj), default=0)

    def min_degree(self, *, ignore_isolated: bool = False) -> int:
        degs = (len(a) for a in self._adj)
        if ignore_isolated:
            degs = (d for d in degs if d > 0)
        return min(degs, default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self._adj[u]

    def __contains__(self, e: object) -> bool:
        if not isinstance(e, tuple) or len(e) != 2:
            return False
        return self.has_edge(*e)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._edges == other._edges

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def copy(self) -> Graph:
        g = Graph.__new__(Graph)
        g.n = self.n
        g._adj = [set(a) for a in self._adj]
        g._edges = set(self._edges)
        return g

    # -- mutation --------------------------------------------------------

    def _check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise InvalidVertexId(f"vertex {v!r} not in 0..{self.n - 1}")

    def add_edge(self, u: int, v: int) -> Edge:
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        e = canon(u, v)
        if e in self._edges:
            raise DuplicateEdge(f"edge {e} already present")
        self._edges.add(e)
        self._adj[u].add(v)
        self._adj[v].add(u)
        return e

    def remove_edge(self, u: int, v: int) -> Edge:
        e = canon(u, v)
        if e not in self._edges:
            raise EdgeNotFound(f"edge {e} not present")
        self._edges.remove(e)
        self._adj[u].discard(v)
        self._adj[v].discard(u)
        return e

    def subgraph_from_edges(self, edges: Iterable[Edge]) -> Graph:
        """Graph on the same vertex ids restricted to ``edges``."""
        return Graph(self.n, edges)

    def relabel(self, perm: list[int]) -> Graph:
        """Image of the graph under the vertex bijection ``v -> perm[v]``."""
        return Graph(self.n, ((perm[u], perm[v]) for u, v in self._edges))


def build_graph(n: int, edge_list: Iterable[tuple[int, int]]) -> Graph:
    return Graph(n, edge_list)


# -- 4-cycles ---------------------------------------------------------------


class FourCycle(NamedTuple):
    """A 4-cycle ``a-b-c-d-a`` with ``a`` the smallest id and ``b < d``."""

    a: int
    b: int
    c: int
    d: int

    @property
    def edges(self) -> tuple[Edge, Edge, Edge, Edge]:
        a, b, c, d = self
        return canon(a, b), canon(b, c), canon(c, d), canon(d, a)

    @classmethod
    def from_vertices(cls, a: int, b: int, c: int, d: int) -> FourCycle:
        """Canonicalize the cycle ``a-b-c-d-a`` given in any rotation/direction."""
        cyc = [a, b, c, d]
        i = cyc.index(min(cyc))
        cyc = cyc[i:] + cyc[:i]
        if cyc[1] > cyc[3]:
            cyc = [cyc[0], cyc[3], cyc[2], cyc[1]]
        return cls(*cyc)


def enumerate_c4(g: Graph) -> list[FourCycle]:
    """All 4-cycles of ``g``, one canonical entry each.

    Every cycle is generated from its smallest vertex ``x`` and the opposite
    vertex ``y``: the two remaining vertices are common neighbours of ``x``
    and ``y`` larger than ``x``.
    """
    out: list[FourCycle] = []
    for x in range(g.n):
        common: dict[int, list[int]] = {}
        for w in sorted(g.neighbors(x)):
            if w < x:
                continue
            for y in g.neighbors(w):
                if y > x:
                    common.setdefault(y, []).append(w)
        for y in sorted(common):
            ws = common[y]
            for i in range(len(ws)):
                for j in range(i + 1, len(ws)):
                    w1, w2 = ws[i], ws[j]
                    if w1 > w2:
                        w1, w2 = w2, w1
                    out.append(FourCycle(x, w1, y, w2))
    out.sort()
    return out


# -- connectivity -----------------------------------------------------------


def components(g: Graph, *, include_isolated: bool = True) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest vertex."""
    seen = [False] * g.n
    comps: list[list[int]] = []
    for s in range(g.n):
        if seen[s]:
            continue
        if not include_isolated and not g.neighbors(s):
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.neighbors(x):
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    queue.append(y)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


@dataclass
class BlockTree:
    """Blocks and cut vertices of one connected component.

    ``blocks[i]`` is the vertex set of block ``i`` and ``block_edges[i]`` its
    edges; ``parent_cut[i]`` is the cut vertex joining block ``i`` to the
    block it hangs from (``None`` for the root) and ``order`` lists block
    indices root-first in breadth-first order.
    """

    blocks: list[frozenset[int]]
    block_edges: list[frozenset[Edge]]
    cut_vertices: frozenset[int]
    tree: dict[tuple[str, int], list[tuple[str, int]]]
    root: int
    parent_cut: list[int | None] = field(default_factory=list)
    order: list[int] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.blocks)


def _biconnected_edge_sets(g: Graph, start: int) -> list[list[Edge]]:
    """Iterative Hopcroft-Tarjan over the component of ``start``."""
    disc: dict[int, int] = {start: 0}
    low: dict[int, int] = {start: 0}
    counter = 1
    edge_stack: list[Edge] = []
    result: list[list[Edge]] = []
    stack: list[tuple[int, int, Iterator[int]]] = [
        (start, -1, iter(sorted(g.neighbors(start))))
    ]
    while stack:
        v, parent, it = stack[-1]
        advanced = False
        for w in it:
            if w == parent:
                continue
            if w not in disc:
                disc[w] = low[w] = counter
                counter += 1
                edge_stack.append((v, w))
                stack.append((w, v, iter(sorted(g.neighbors(w)))))
                advanced = True
                break
            if disc[w] < disc[v]:
                edge_stack.append((v, w))
                if disc[w] < low[v]:
                    low[v] = disc[w]
        if advanced:
            continue
        stack.pop()
        if parent == -1:
            continue
        if low[v] < low[parent]:
            low[parent] = low[v]
        if low[v] >= disc[parent]:
            block: list[Edge] = []
            while True:
                a, b = edge_stack.pop()
                block.append(canon(a, b))
                if (a, b) == (parent, v):
                    break
            result.append(block)
    return result


def block_decomposition(g: Graph, root_vertex: int) -> BlockTree:
    """Block tree of the component containing ``root_vertex``.

    The root block is the one containing ``root_vertex`` (the first such block
    in discovery order when it is a cut vertex).
    """
    edge_sets = _biconnected_edge_sets(g, root_vertex)
    # discovery order emits leaf blocks first; reverse so the root's blocks lead
    edge_sets.reverse()
    blocks = [frozenset(x for e in es for x in e) for es in edge_sets]
    block_edges = [frozenset(es) for es in edge_sets]
    membership: dict[int, list[int]] = {}
    for i, b in enumerate(blocks):
        for x in sorted(b):
            membership.setdefault(x, []).append(i)
    cuts = frozenset(x for x, bs in membership.items() if len(bs) > 1)
    tree: dict[tuple[str, int], list[tuple[str, int]]] = {}
    for c in sorted(cuts):
        for i in membership[c]:
            tree.setdefault(("cut", c), []).append(("block", i))
            tree.setdefault(("block", i), []).append(("cut", c))

    root = 0
    if blocks:
        root = min(i for i, b in enumerate(blocks) if root_vertex in b)
    parent_cut: list[int | None] = [None] * len(blocks)
    order: list[int] = []
    if blocks:
        seen_blocks = {root}
        seen_cuts: set[int] = set()
        queue = deque([root])
        while queue:
            i = queue.popleft()
            order.append(i)
            for c in sorted(blocks[i] & cuts):
                if c in seen_cuts:
                    continue
                seen_cuts.add(c)
                for j in membership[c]:
                    if j not in seen_blocks:
                        seen_blocks.add(j)
                        parent_cut[j] = c
                        queue.append(j)
    return BlockTree(
        blocks=blocks,
        block_edges=block_edges,
        cut_vertices=cuts,
        tree=tree,
        root=root,
        parent_cut=parent_cut,
        order=order,
    )


def blocks(g: Graph) -> BlockTree:
    """Block tree of a connected graph, rooted at the block containing vertex 0."""
    if not is_connected(g):
        raise Disconnected(f"graph has {len(components(g))} components")
    if g.n == 0:
        return BlockTree([], [], frozenset(), {}, 0)
    return block_decomposition(g, 0)


def is_biconnected(g: Graph) -> bool:
    """True when the non-isolated part of ``g`` is a single 2-connected block
    with at least 3 vertices."""
    comps = components(g, include_isolated=False)
    if len(comps) != 1 or len(comps[0]) < 3:
        return False
    return len(_biconnected_edge_sets(g, comps[0][0])) == 1


# -- degeneracy & class sanity ----------------------------------------------


def degeneracy(g: Graph) -> tuple[int, list[int]]:
    """Min-degree peeling; returns the largest degree seen at removal time and
    the removal order (ties broken by smallest id)."""
    deg = g.degrees()
    heap = [(d, v) for v, d in enumerate(deg)]
    heapq.heapify(heap)
    removed = [False] * g.n
    order: list[int] = []
    best = 0
    while heap:
        d, v = heapq.heappop(heap)
        if removed[v] or d != deg[v]:
            continue
        removed[v] = True
        order.append(v)
        best = max(best, d)
        for w in g.neighbors(v):
            if not removed[w]:
                deg[w] -= 1
                heapq.heappush(heap, (deg[w], w))
    return best, order


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


@dataclass
class CheckReport:
    graph_class: str
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        return {
            "class": self.graph_class,
            "ok": self.ok,
            "checks": [c.to_dict() for c in self.checks],
        }


def edge_bound(graph_class: str, n: int) -> int:
    """Largest edge count a connected ``graph_class`` graph on ``n`` vertices can have."""
    if graph_class == "outerplanar":
        return 2 * n - 3 if n >= 2 else 0
    if graph_class == "planar":
        return 3 * n - 6 if n >= 3 else n * (n - 1) // 2
    raise ValueError(f"unknown graph class {graph_class!r}")


DEGENERACY_BOUND = {"outerplanar": 2, "planar": 5}


def _component_edge_checks(g: Graph, graph_class: str) -> list[Check]:
    checks = []
    for comp in components(g, include_isolated=False):
        members = set(comp)
        e = sum(1 for u, v in g.edges if u in members)
        bound = edge_bound(graph_class, len(comp))
        checks.append(
            Check(
                f"edge_bound[component {comp[0]}]",
                e <= bound,
                f"e={e} bound={bound} n={len(comp)}",
            )
        )
    return checks


def class_sanity(g: Graph, graph_class: str) -> CheckReport:
    """Necessary conditions for membership in ``graph_class``.

    Passing is not a proof of planarity/outerplanarity.
    """
    if graph_class not in GRAPH_CLASSES:
        raise ValueError(f"unknown graph class {graph_class!r}")
    report = CheckReport(graph_class, _component_edge_checks(g, graph_class))
    d, _ = degeneracy(g)
    bound = DEGENERACY_BOUND[graph_class]
    report.checks.append(Check("degeneracy", d <= bound, f"degeneracy={d} bound={bound}"))
    return report


# -- DIMACS-style text format -----------------------------------------------


def parse_dimacs(text: str) -> Graph:
    """Parse ``p edge <n> <m>`` / ``e <u> <v>`` text with 1-based vertex ids."""
    n: int | None = None
    declared_m = 0
    pairs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        try:
            if parts[0] == "p":
                if n is not None or len(parts) != 4:
                    raise ParseError(f"line {lineno}: bad problem line {raw!r}")
                n, declared_m = int(parts[2]), int(parts[3])
            elif parts[0] == "e":
                if n is None or len(parts) != 3:
                    raise ParseError(f"line {lineno}: bad edge line {raw!r}")
                pairs.append((int(parts[1]) - 1, int(parts[2]) - 1))
            else:
                raise ParseError(f"line {lineno}: unknown record {parts[0]!r}")
        except ValueError as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(f"line {lineno}: {exc}") from exc
    if n is None:
        raise ParseError("missing 'p edge <n> <m>' line")
    if len(pairs) != declared_m:
        raise ParseError(f"header declares {declared_m} edges, found {len(pairs)}")
    try:
        return Graph(n, pairs)
    except Exception as exc:
        raise ParseError(str(exc)) from exc


def format_dimacs(g: Graph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"c {c}" for c in comment.splitlines())
    lines.append(f"p edge {g.n} {g.m}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edge_list())
    return "\n".join(lines) + "\n"


def read_dimacs(path: str) -> Graph:
    with open(path) as fh:
        return parse_dimacs(fh.read())


def write_dimacs(g: Graph, path: str, comment: str | None = None) -> None:
    with open(path, "w") as fh:
        fh.write(format_dimacs(g, comment))
