"""Named graphs and seeded random planar / outerplanar instances.

Randomness comes from numpy's PCG64 generator seeded with the caller's
integer seed, so a given ``(family, n, seed)`` always yields the same graph.
The stacked triangulations produced by :func:`random_max_planar` are only the
Apollonian-type maximal planar graphs, not a uniform sample.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from .errors import UnknownFamily
from .graph import Graph


def rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


# Pentagon a..e = 0..4 with chords ac, ad.
FIG1A_EDGES = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2), (0, 3)]
# a=0, b=1, c=2, d=3, e=4, f=5: a and f joined to b,c,d,e; path b-c-d-e; arc b-e.
FIG1B_EDGES = [
    (0, 1), (1, 5), (0, 2), (2, 5), (0, 3), (3, 5), (0, 4), (4, 5),
    (1, 2), (2, 3), (3, 4), (1, 4),
]


def fig1a() -> Graph:
    return Graph(5, FIG1A_EDGES)


def fig1b() -> Graph:
    return Graph(6, FIG1B_EDGES)


def complete(n: int) -> Graph:
    return Graph(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def k2d(delta: int) -> Graph:
    if delta < 1:
        raise ValueError("delta must be at least 1")
    return complete_bipartite(2, delta)


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def star(leaves: int) -> Graph:
    return Graph(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def wheel(n: int) -> Graph:
    """Hub 0 joined to the rim cycle 1..n."""
    if n < 3:
        raise ValueError("a wheel needs a rim of at least 3 vertices")
    rim = [(i, i % n + 1) for i in range(1, n + 1)]
    return Graph(n + 1, rim + [(0, i) for i in range(1, n + 1)])


def octahedron() -> Graph:
    """K_{2,2,2} with antipodal pairs {0,1}, {2,3}, {4,5}."""
    return Graph(
        6, ((i, j) for i in range(6) for j in range(i + 1, 6) if j != i + 1 or i % 2)
    )


def icosahedron() -> Graph:
    """Top 0, upper ring 1..5, lower ring 6..10, bottom 11."""
    edges = []
    for i in range(5):
        up, up_next = 1 + i, 1 + (i + 1) % 5
        lo, lo_next = 6 + i, 6 + (i + 1) % 5
        edges += [(0, up), (up, up_next), (up, lo), (up, lo_next), (lo, lo_next), (lo, 11)]
    return Graph(12, edges)


def bowtie() -> Graph:
    return Graph(5, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)])


def random_max_planar(n: int, seed: int) -> Graph:
    """Stacked triangulation: repeatedly put a new vertex inside a random
    triangular face and join it to the three corners.  ``3n - 6`` edges."""
    if n < 3:
        raise ValueError("n must be at least 3")
    r = rng(seed)
    g = Graph(n, [(0, 1), (1, 2), (0, 2)])
    faces = [(0, 1, 2), (0, 1, 2)]  # inner and outer face of the triangle
    for v in range(3, n):
        i = int(r.integers(len(faces)))
        a, b, c = faces[i]
        g.add_edge(v, a)
        g.add_edge(v, b)
        g.add_edge(v, c)
        faces[i] = (a, b, v)
        faces.append((b, c, v))
        faces.append((a, c, v))
    return g


def random_max_outerplanar(n: int, seed: int) -> Graph:
    """Cycle ``0..n-1`` plus a random triangulation of the polygon by ear
    cutting.  ``2n - 3`` edges."""
    if n < 3:
        raise ValueError("n must be at least 3")
    r = rng(seed)
    g = cycle(n)
    polygon = list(range(n))
    while len(polygon) > 3:
        i = int(r.integers(len(polygon)))
        a = polygon[i - 1]
        b = polygon[(i + 1) % len(polygon)]
        g.add_edge(a, b)
        del polygon[i]
    return g


def sparsify(g: Graph, keep_prob: float, seed: int) -> Graph:
    """Keep each edge independently with probability ``keep_prob``."""
    if not 0.0 <= keep_prob <= 1.0:
        raise ValueError("keep_prob must lie in [0, 1]")
    r = rng(seed)
    edges = g.edge_list()
    keep = r.random(len(edges)) < keep_prob
    return Graph(g.n, (e for e, k in zip(edges, keep) if k))


_FIXED = {
    "fig1a": fig1a,
    "fig1b": fig1b,
    "k4": lambda: complete(4),
    "k5": lambda: complete(5),
    "k23": lambda: complete_bipartite(2, 3),
    "octahedron": octahedron,
    "icosahedron": icosahedron,
}
_SIZED = {
    "k2d": k2d,
    "cycle": cycle,
    "wheel": wheel,
}
_RANDOM = {
    "max_planar": random_max_planar,
    "max_outerplanar": random_max_outerplanar,
}
FAMILIES = tuple(_FIXED) + tuple(_SIZED) + tuple(_RANDOM)


def named(family: str) -> Graph:
    """Graph for a family name such as ``fig1a``, ``k2d(7)`` or ``cycle(5)``."""
    spec = GenSpec.parse(family)
    return spec.build()


_SPEC_RE = re.compile(r"^\s*([a-z_0-9]+?)\s*(?:\(\s*(\d+)\s*\))?\s*$")


@dataclass(frozen=True)
class GenSpec:
    family: str
    param: int | None = None
    seed: int = 0
    keep_prob: float = 1.0

    @classmethod
    def parse(cls, text: str, seed: int = 0, keep_prob: float = 1.0) -> GenSpec:
        m = _SPEC_RE.match(text)
        if not m or m.group(1) not in FAMILIES:
            raise UnknownFamily(f"unknown graph family {text!r}")
        family, param = m.group(1), m.group(2)
        spec = cls(family, int(param) if param is not None else None, seed, keep_prob)
        spec.validate()
        return spec

    def validate(self) -> None:
        if self.family not in FAMILIES:
            raise UnknownFamily(f"unknown graph family {self.family!r}")
        if self.family in _FIXED:
            if self.param is not None:
                raise ValueError(f"{self.family} takes no size parameter")
        elif self.param is None:
            raise ValueError(f"{self.family} needs a size parameter, e.g. {self.family}(10)")
        elif self.family == "k2d" and self.param < 1:
            raise ValueError("k2d needs delta >= 1")
        elif self.family != "k2d" and self.param < 3:
            raise ValueError(f"{self.family} needs n >= 3")
        if not 0.0 <= self.keep_prob <= 1.0:
            raise ValueError("keep_prob must lie in [0, 1]")

    def build(self) -> Graph:
        if self.family in _FIXED:
            g = _FIXED[self.family]()
        elif self.family in _SIZED:
            g = _SIZED[self.family](self.param)
        else:
            g = _RANDOM[self.family](self.param, self.seed)
        if self.keep_prob < 1.0:
            # separate stream from the one that built the graph
            g = sparsify(g, self.keep_prob, self.seed + 1)
        return g
