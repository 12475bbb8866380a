from __future__ import annotations

import functools
import itertools

import networkx as nx
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from freeminor.graph import Graph

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

ACCEPTANCE_LINES: list[str] = []


def record_criterion(label: str, ok: bool, detail: str = "") -> None:
    ACCEPTANCE_LINES.append(f"criterion {label}: {'PASS' if ok else 'FAIL'}" + (f" ({detail})" if detail else ""))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 7, density=None):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    p = draw(st.floats(0.1, 0.9)) if density is None else density
    mask = draw(st.lists(st.floats(0, 1), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, r in zip(pairs, mask) if r < p])


def _key(h: nx.Graph):
    return frozenset(frozenset(e) for e in h.edges()), h.number_of_nodes()


@functools.lru_cache(maxsize=None)
def _oracle_minor(edges: frozenset, n: int, pattern_edges: frozenset, pn: int) -> bool:
    host = nx.Graph()
    host.add_nodes_from(range(n))
    host.add_edges_from(tuple(e) for e in edges)
    pat = nx.Graph()
    pat.add_nodes_from(range(pn))
    pat.add_edges_from(tuple(e) for e in pattern_edges)
    m, pm = host.number_of_edges(), pat.number_of_edges()
    if n < pn or m < pm:
        return False
    if nx.algorithms.isomorphism.GraphMatcher(host, pat).subgraph_is_monomorphic():
        return True
    if n == pn:
        return False
    for v in list(host.nodes):
        h = nx.convert_node_labels_to_integers(nx.restricted_view(host, [v], []).copy())
        if _oracle_minor(*_key(h), pattern_edges, pn):
            return True
    for u, v in list(host.edges):
        h = nx.contracted_edge(host, (u, v), self_loops=False)
        h = nx.convert_node_labels_to_integers(nx.Graph(h))
        if _oracle_minor(*_key(h), pattern_edges, pn):
            return True
    return False


def oracle_has_minor(host: Graph, pattern: Graph) -> bool:
    """Minor test by deletion/contraction closure with networkx subgraph matching."""
    return _oracle_minor(*_key(to_nx(host)), *_key(to_nx(pattern)))


@pytest.fixture
def nxg():
    return to_nx
