import networkx as nx
import pytest

from bcolor.errors import UnknownFamily
from bcolor.generators import (
    FAMILIES,
    GenSpec,
    fig1a,
    fig1b,
    icosahedron,
    named,
    octahedron,
    random_max_outerplanar,
    random_max_planar,
    sparsify,
    wheel,
)
from oracles import is_outerplanar_small


def test_named_graph_shapes():
    assert (fig1a().n, fig1a().m, fig1a().max_degree()) == (5, 7, 4)
    assert (fig1b().n, fig1b().m, fig1b().max_degree()) == (6, 12, 4)
    assert set(octahedron().degrees()) == {4}
    assert set(icosahedron().degrees()) == {5} and icosahedron().m == 30
    assert wheel(5).degree(0) == 5
    assert is_outerplanar_small(fig1a().n, fig1a().edges)
    assert nx.is_isomorphic(nx.Graph(list(fig1b().edges)), nx.Graph(list(octahedron().edges)))


@pytest.mark.parametrize("n", [3, 4, 10, 57])
def test_random_max_planar(n):
    for s in range(5):
        g = random_max_planar(n, s)
        assert g.m == 3 * n - 6
        assert nx.check_planarity(nx.Graph(list(g.edges)))[0]


@pytest.mark.parametrize("n", [3, 4, 10, 41])
def test_random_max_outerplanar(n):
    for s in range(5):
        g = random_max_outerplanar(n, s)
        assert g.m == 2 * n - 3
        assert is_outerplanar_small(g.n, g.edges)


def test_seeds_are_reproducible():
    assert random_max_planar(50, 7) == random_max_planar(50, 7)
    assert random_max_planar(50, 7) != random_max_planar(50, 8)
    assert sparsify(random_max_outerplanar(30, 1), 0.5, 2) == sparsify(
        random_max_outerplanar(30, 1), 0.5, 2
    )


def test_sparsify_bounds():
    g = random_max_planar(30, 1)
    assert sparsify(g, 1.0, 0) == g
    assert sparsify(g, 0.0, 0).m == 0
    with pytest.raises(ValueError):
        sparsify(g, 1.5, 0)


def test_genspec_parsing():
    assert named("k2d(7)").m == 14
    assert GenSpec.parse("cycle( 5 )").build().m == 5
    spec = GenSpec.parse("max_planar(20)", seed=3, keep_prob=0.5)
    assert spec.build() == spec.build()
    assert set(FAMILIES) >= {"fig1a", "fig1b", "k2d", "max_planar", "max_outerplanar"}


@pytest.mark.parametrize("text", ["dodecahedron", "k2d", "fig1a(3)", "cycle(2)", "k2d(0)", ""])
def test_genspec_rejects(text):
    with pytest.raises((UnknownFamily, ValueError)):
        GenSpec.parse(text)


def test_genspec_keep_prob_validated():
    with pytest.raises(ValueError):
        GenSpec.parse("cycle(5)", keep_prob=-0.1)
