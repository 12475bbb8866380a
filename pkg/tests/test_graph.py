import pickle

import pytest
from hypothesis import given

from conftest import graphs
from freeminor.catalog import (complete, complete_bipartite, cycle, k33_minus, k5_minus, make_catalog,
                               multiedge, parse_catalog_id, path, petersen, prism, wheel, xi)
from freeminor.graph import (Graph, GraphError, add_edge, add_vertex, complement, components,
                             contract_edge, delete_edge, delete_vertex, disjoint_union, subdivide_edge)
from freeminor.isomorphism import is_isomorphic


def test_construction_rejects_loops_parallels_and_range():
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 0)])
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 1), (1, 0)])
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 3)])
    with pytest.raises(GraphError):
        Graph.from_edges(33, [])


def test_basic_accessors():
    g = wheel(4)
    assert g.n == 5 and g.m == 8
    assert g.degree(4) == 4
    assert g.edges == tuple(sorted(g.edges))
    assert len(g.non_edges()) == 2
    assert not g.is_complete() and complete(4).is_complete()


def test_graphs_are_hashable_and_picklable():
    g = prism()
    assert pickle.loads(pickle.dumps(g)) == g
    assert len({g, prism(), wheel(3)}) == 2


@pytest.mark.parametrize("ident,expected", [
    ("M2", cycle(3)), ("M1", complete(2)), ("W3", complete(4)), ("M3", delete_edge(complete(4), (0, 1))),
])
def test_catalog_identities(ident, expected):
    assert is_isomorphic(make_catalog(ident), expected)


def test_catalog_parsing():
    assert parse_catalog_id("K(7)").param == 7
    assert make_catalog("K2,3") == complete_bipartite(2, 3)
    assert make_catalog("Petersen").m == 15
    with pytest.raises(GraphError):
        parse_catalog_id("Q9")


def test_catalog_sizes():
    assert (xi().n, xi().m) == (6, 7)
    assert (k5_minus().m, k33_minus().m) == (9, 8)
    assert multiedge(4).n == 5 and multiedge(4).m == 7
    assert sorted(petersen().degrees()) == [3] * 10


def test_delete_vertex_examples():
    for v in range(5):
        assert is_isomorphic(delete_vertex(complete(5), v), complete(4))
    assert is_isomorphic(delete_vertex(cycle(4), 2), path(3))
    assert is_isomorphic(delete_vertex(wheel(4), 4), cycle(4))


def test_edge_edit_examples():
    assert is_isomorphic(delete_edge(complete(5), (2, 4)), k5_minus())
    g = subdivide_edge(subdivide_edge(complete(4), (0, 1)), (2, 3))
    assert is_isomorphic(g, k33_minus())
    assert is_isomorphic(add_edge(cycle(4), (0, 2)), delete_edge(complete(4), (1, 3)))
    with pytest.raises(GraphError):
        add_edge(cycle(4), (0, 1))
    with pytest.raises(GraphError):
        delete_edge(cycle(4), (0, 2))


def test_contraction_examples():
    assert is_isomorphic(contract_edge(cycle(4), (0, 1)), cycle(3))
    assert is_isomorphic(contract_edge(complete(4), (1, 3)), complete(3))
    # the pendant edge of xi hangs from vertex 4
    assert is_isomorphic(contract_edge(xi(), (4, 5)), complete_bipartite(2, 3))


def test_misc_operations():
    assert complement(complete(4)).m == 0
    u = disjoint_union(cycle(3), path(2))
    assert components(u) == [[0, 1, 2], [3, 4]]
    g = add_vertex(cycle(3), [0, 1])
    assert g.n == 4 and g.degree(3) == 2


@given(graphs(min_n=2))
def test_contraction_counts(g):
    for e in g.edges:
        h = contract_edge(g, e)
        common = len(set(g.neighbors(e[0])) & set(g.neighbors(e[1])))
        assert h.n == g.n - 1
        assert h.m == g.m - 1 - common


@given(graphs(min_n=1))
def test_subdivide_then_contract_restores(g):
    for e in g.edges:
        h = subdivide_edge(g, e)
        assert h.n == g.n + 1 and h.m == g.m + 1
        assert is_isomorphic(contract_edge(h, (e[0], g.n)), g)


@given(graphs())
def test_relabel_preserves_structure(g):
    perm = list(reversed(range(g.n)))
    h = g.relabel(perm)
    assert sorted(h.degrees()) == sorted(g.degrees())
    assert all(h.has_edge(perm[u], perm[v]) for u, v in g.edges)
