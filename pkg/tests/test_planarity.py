import networkx as nx
from hypothesis import given, settings

from conftest import graphs, to_nx
from freeminor.catalog import complete, k33, petersen, prism, wheel
from freeminor.generate import enumerate_up_to
from freeminor.graph import Graph, add_edge, subdivide_edge
from freeminor.minors import verify_minor_model
from freeminor.planarity import is_planar_fast, is_planar_minor, kuratowski_certificate


def test_examples():
    assert is_planar_minor(complete(4))
    assert not is_planar_minor(k33())
    assert not is_planar_minor(petersen())
    assert not is_planar_fast(complete(5))
    assert is_planar_fast(Graph(0, ()))
    w = add_edge(wheel(6), (0, 2))
    assert is_planar_fast(w) and is_planar_minor(w)


def test_kuratowski_certificates():
    assert kuratowski_certificate(complete(4)) is None
    g = complete(5)
    for e in complete(5).edges:
        g = subdivide_edge(g, e)
    m = kuratowski_certificate(g)
    assert m is not None and m.pattern == complete(5) and verify_minor_model(m)
    m = kuratowski_certificate(k33())
    assert all(len(s) == 1 for s in m.branch_sets)


def test_routes_agree_up_to_seven():
    for g in enumerate_up_to(7, connected_only=True):
        assert is_planar_fast(g) == is_planar_minor(g) == nx.check_planarity(to_nx(g))[0]


@settings(max_examples=150)
@given(graphs(min_n=5, max_n=14, density=None))
def test_fast_route_matches_networkx(g):
    assert is_planar_fast(g) == nx.check_planarity(to_nx(g))[0]


def test_prism_and_wheels_planar():
    assert is_planar_fast(prism())
    assert all(is_planar_fast(wheel(k)) for k in range(3, 12))
