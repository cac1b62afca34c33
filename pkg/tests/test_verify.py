import itertools
import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bcolor.errors import PartialColoring
from bcolor.generators import (
    complete,
    complete_bipartite,
    cycle,
    fig1b,
    icosahedron,
    octahedron,
    random_max_outerplanar,
    random_max_planar,
    sparsify,
)
from bcolor.graph import Graph
from bcolor.verify import (
    check_structure,
    is_bipartite,
    outerplanar_block_witness,
    small_degsum_precondition,
    small_degsum_witness,
    verify_b_coloring,
)
from oracles import is_b_coloring


def test_proper_violation_reported():
    g = cycle(4)
    col = {(0, 1): 0, (1, 2): 0, (2, 3): 1, (0, 3): 2}
    rep = verify_b_coloring(g, col)
    assert not rep.ok
    assert rep.proper_violations == [(1, (0, 1), (1, 2))]
    assert len(rep.rainbow_violations) == 1


def test_rainbow_violation_lists_repeated_colors():
    g = cycle(4)
    col = {(0, 1): 0, (1, 2): 1, (2, 3): 0, (0, 3): 1}
    rep = verify_b_coloring(g, col)
    assert rep.proper_violations == []
    assert len(rep.rainbow_violations) == 1
    cyc, repeated = rep.rainbow_violations[0]
    assert repeated == [0, 1]
    data = json.loads(rep.to_json())
    assert data["ok"] is False and data["colors_used"] == 2


def test_partial_coloring_rejected():
    with pytest.raises(PartialColoring):
        verify_b_coloring(cycle(4), {(0, 1): 0})


@given(st.integers(3, 7), st.integers(0, 5000), st.floats(0.4, 1.0), st.integers(2, 8))
@settings(max_examples=150, deadline=None)
def test_agrees_with_brute_force(n, seed, p, k):
    g = sparsify(random_max_planar(n, seed), p, seed)
    r = __import__("random").Random(seed)
    col = {e: r.randrange(k) for e in g.edges}
    assert verify_b_coloring(g, col).ok == is_b_coloring(g.n, g.edges, col)


def test_exhaustive_small_agreement():
    # every 3-coloring of the edges of K4 minus an edge
    g = Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)])
    es = g.edge_list()
    for colors in itertools.product(range(4), repeat=len(es)):
        col = dict(zip(es, colors))
        assert verify_b_coloring(g, col).ok == is_b_coloring(4, es, col)


def test_is_bipartite():
    assert is_bipartite(cycle(6), list(range(6)))
    assert not is_bipartite(cycle(5), list(range(5)))


def test_outerplanar_witness_kinds():
    assert outerplanar_block_witness(cycle(5))[0] == "cycle"
    assert outerplanar_block_witness(Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]))[0] == "deg3"
    assert outerplanar_block_witness(complete(4)) is None


def test_fig1a_witness():
    from bcolor.generators import fig1a

    assert outerplanar_block_witness(fig1a()) == ("deg3", 2, [1])


def test_maximal_outerplanar_n20():
    from bcolor.graph import degeneracy

    g = random_max_outerplanar(20, 0)
    assert g.m == 37 and degeneracy(g)[0] == 2
    assert sum(1 for d in g.degrees() if d <= 2) >= 2
    assert check_structure(g, "outerplanar").ok


def test_outerplanar_block_witness_on_corpus():
    # every 2-connected outerplanar graph is a cycle, or has a degree-3 vertex
    # with a degree-2 neighbour, or a degree-4 vertex with two degree-2 neighbours
    for s in range(200):
        g = random_max_outerplanar(4 + s % 60, s)
        assert outerplanar_block_witness(g) is not None, s


def test_small_degsum_on_precondition_graphs():
    for g in (octahedron(), icosahedron(), fig1b()):
        assert small_degsum_precondition(g)
        x, y = small_degsum_witness(g)
        assert g.degree(x) in (4, 5) and g.degree(y) <= 9


def test_check_structure_planar_and_outerplanar():
    assert check_structure(random_max_planar(40, 3), "planar").ok
    assert check_structure(random_max_outerplanar(40, 3), "outerplanar").ok
    assert not check_structure(complete_bipartite(3, 3), "planar").ok
    assert not check_structure(complete(4), "outerplanar").ok
    rep = check_structure(complete(7), "planar")
    assert "min_degree_at_most_5" in {c.name for c in rep.failures()}
