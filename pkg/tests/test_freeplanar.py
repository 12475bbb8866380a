import networkx as nx
import pytest
from hypothesis import given

from conftest import graphs, to_nx
from freeminor.catalog import complete, cycle, k33_minus, k5_minus, prism, wheel, xi
from freeminor.decomposition import BOND, POLYGON, PROPER, MultiGraphComponent
from freeminor.freeplanar import (ROUTES, check_no_xi_and_m4, classify_component, exists_outerplanar_edge,
                                  is_free_planar, is_free_planar_def, is_free_planar_minors,
                                  is_free_planar_structural, is_outerplanar, reduced_kuratowski_model)
from freeminor.generate import enumerate_up_to
from freeminor.graph import Graph, GraphError, add_vertex, delete_edge, subdivide_edge
from freeminor.minors import has_minor, verify_minor_model


def _component(g: Graph, virtual_edges) -> MultiGraphComponent:
    virtual = {tuple(sorted(e)) for e in virtual_edges}
    edges = g.edges
    labels = tuple(i + 1 if e in virtual else None for i, e in enumerate(edges))
    kind = POLYGON if g.m == g.n and all(d == 2 for d in g.degrees()) else PROPER
    return MultiGraphComponent(kind, tuple(range(g.n)), edges, labels)


def test_definition_route_examples():
    v = is_free_planar_def(k5_minus())
    assert not v.is_free_planar and v.witness == (0, 1)
    assert is_free_planar_def(cycle(7)).is_free_planar
    assert is_free_planar_def(complete(4)).is_free_planar
    assert not is_free_planar_def(complete(5)).is_free_planar


def test_minor_route_examples():
    assert is_free_planar_minors(wheel(5)).is_free_planar
    v = is_free_planar_minors(subdivide_edge(wheel(5), (0, 5)))
    assert not v.is_free_planar and verify_minor_model(v.witness)
    assert not is_free_planar_minors(k33_minus()).is_free_planar


def test_structural_route_examples():
    assert is_free_planar_structural(prism()).is_free_planar
    assert not is_free_planar_structural(subdivide_edge(prism(), (0, 1))).is_free_planar
    two_squares = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 1)])
    assert is_free_planar_structural(two_squares).is_free_planar == is_free_planar_def(two_squares).is_free_planar


def test_classifier_examples():
    ok, _ = classify_component(_component(complete(4), [(0, 1), (2, 3)]))
    assert not ok
    ok, label = classify_component(_component(wheel(4), [(0, 1), (1, 2), (2, 3), (0, 3)]))
    assert ok and "W4" in label
    ok, _ = classify_component(_component(prism(), [(0, 3)]))
    assert ok
    ok, _ = classify_component(_component(prism(), [(0, 1)]))
    assert not ok
    ok, _ = classify_component(_component(wheel(5), [(0, 5)]))
    assert not ok
    # K4 with virtual edges at one vertex reads as spokes of W3, on a triangle as its rim
    assert classify_component(_component(complete(4), [(0, 1), (0, 2), (0, 3)]))[0]
    assert classify_component(_component(complete(4), [(0, 1), (1, 2), (0, 2)]))[0]
    assert classify_component(MultiGraphComponent(BOND, (0, 1), ((0, 1),) * 3, (1, 2, None)))[0]
    assert classify_component(_component(cycle(5), [(0, 1)]))[0]
    assert not classify_component(_component(complete(5), []))[0]


def test_classifier_rejects_malformed_component():
    broken = MultiGraphComponent(PROPER, (0, 1, 2, 3), ((0, 1), (1, 2), (2, 3)), (None, None, None))
    with pytest.raises(GraphError):
        classify_component(broken)


def test_three_routes_agree_small():
    for g in enumerate_up_to(6, connected_only=True):
        verdicts = {name: fn(g).is_free_planar for name, fn in ROUTES.items()}
        assert len(set(verdicts.values())) == 1, verdicts
        assert verdicts["def"] == is_free_planar(g)


def test_witnesses_are_meaningful():
    for g in enumerate_up_to(6, connected_only=True):
        for name, fn in ROUTES.items():
            v = fn(g)
            if v.is_free_planar:
                assert v.witness is None
            else:
                assert v.witness_text()


def test_xi_and_multiedge_checks():
    assert check_no_xi_and_m4(wheel(6))
    assert check_no_xi_and_m4(prism())
    assert not check_no_xi_and_m4(complete(5))
    with pytest.raises(GraphError):
        check_no_xi_and_m4(cycle(5))
    assert has_minor(k33_minus(), xi())


def _outerplanar_oracle(g: Graph) -> bool:
    return nx.check_planarity(to_nx(add_vertex(g, range(g.n))))[0]


@given(graphs(max_n=8))
def test_outerplanarity_matches_apex_oracle(g):
    assert is_outerplanar(g) == _outerplanar_oracle(g)


def test_outerplanar_edge_examples():
    for g in (wheel(4), prism(), complete(4)):
        e = exists_outerplanar_edge(g)
        assert e is not None and _outerplanar_oracle(delete_edge(g, e))


def test_outerplanar_edge_in_every_3_connected_free_planar_graph():
    for g in (complete(4), wheel(5), wheel(6), prism()):
        assert exists_outerplanar_edge(g) is not None
    assert exists_outerplanar_edge(complete(5)) is None


def test_reduced_kuratowski_model():
    assert reduced_kuratowski_model(prism()) is None
    m = reduced_kuratowski_model(subdivide_edge(prism(), (0, 1)))
    assert m is not None and verify_minor_model(m)
