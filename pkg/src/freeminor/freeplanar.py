"""Free-planar recognition by three independent routes.

A graph is free-planar when it is planar and stays planar after adding any
single edge.  The three recognisers:

* ``is_free_planar_def`` applies that definition directly with the fast
  planarity test;
* ``is_free_planar_minors`` excludes the reduced Kuratowski graphs K5- and
  K3,3- as minors;
* ``is_free_planar_structural`` splits into blocks, decomposes each block
  into 3-connected components and accepts only polygons, bonds, wheels whose
  virtual edges are all rim edges (or, for K4, all spokes of one hub), and
  prisms whose virtual edges avoid both triangles.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .catalog import complete, complete_bipartite, k33_minus, k5_minus, multiedge, xi
from .decomposition import (BOND, POLYGON, MultiGraphComponent, decompose_3connected,
                            decompose_blocks, is_3_connected)
from .graph import Graph, GraphError, add_edge, delete_edge
from .minors import MinorModel, find_minor_model, has_minor
from .planarity import is_planar_fast, kuratowski_certificate

K5_MINUS = k5_minus()
K33_MINUS = k33_minus()
REDUCED_KURATOWSKI = (K5_MINUS, K33_MINUS)
M4 = multiedge(4)
XI = xi()
K4 = complete(4)
K23 = complete_bipartite(2, 3)


@dataclass(frozen=True)
class ComponentWitness:
    block: tuple[int, ...]
    component: MultiGraphComponent
    label: str

    def to_text(self) -> str:
        c = self.component
        virt = [f"{c.vertices[a]}-{c.vertices[b]}" for (a, b), t in zip(c.edges, c.virtual) if t is not None]
        return f"component {list(c.vertices)} {self.label} virtual={virt}"


@dataclass(frozen=True)
class FreePlanarVerdict:
    is_free_planar: bool
    route: str
    witness: Any = None

    def witness_text(self) -> str:
        w = self.witness
        if w is None:
            return ""
        if isinstance(w, tuple):
            return f"nonedge {w[0]}-{w[1]}"
        if isinstance(w, MinorModel):
            name = "K5-" if w.pattern == K5_MINUS else "K33-" if w.pattern == K33_MINUS else \
                "K5" if w.pattern.n == 5 else "K33"
            sets = " ".join("{" + ",".join(map(str, sorted(s))) + "}" for s in w.branch_sets)
            return f"{name} {sets}"
        return w.to_text()


def is_free_planar_def(g: Graph) -> FreePlanarVerdict:
    non_edges = g.non_edges()
    if not non_edges:
        # complete graph: only its own planarity is at stake
        if is_planar_fast(g):
            return FreePlanarVerdict(True, "def")
        return FreePlanarVerdict(False, "def", kuratowski_certificate(g))
    for e in non_edges:
        if not is_planar_fast(add_edge(g, e)):
            return FreePlanarVerdict(False, "def", e)
    return FreePlanarVerdict(True, "def")


def is_free_planar_minors(g: Graph) -> FreePlanarVerdict:
    for pattern in REDUCED_KURATOWSKI:
        model = find_minor_model(g, pattern)
        if model is not None:
            return FreePlanarVerdict(False, "minors", model)
    return FreePlanarVerdict(True, "minors")


def _wheel_hub_rim(g: Graph) -> list[tuple[int, list[int]]]:
    """All (hub, rim cycle order) presentations of ``g`` as a wheel."""
    out = []
    n = g.n
    if n < 4:
        return out
    for hub in range(n):
        if g.degree(hub) != n - 1:
            continue
        rim = [v for v in range(n) if v != hub]
        if any(bin(g.adj[v] & ~(1 << hub)).count("1") != 2 for v in rim):
            continue
        order = [rim[0]]
        prev = None
        while True:
            cur = order[-1]
            nxt = [w for w in g.neighbors(cur) if w != hub and w != prev]
            if not nxt or nxt[0] == order[0]:
                break
            prev = cur
            order.append(nxt[0])
        if len(order) == len(rim):
            out.append((hub, order))
    return out


def _prism_triangles(g: Graph) -> list[set[int]] | None:
    if g.n != 6 or g.m != 9 or any(d != 3 for d in g.degrees()):
        return None
    tri = []
    for a in range(6):
        for b in g.neighbors(a):
            for c in g.neighbors(b):
                if a < b < c and g.has_edge(a, c):
                    tri.append({a, b, c})
    if len(tri) == 2 and not tri[0] & tri[1]:
        return tri
    return None


def classify_component(c: MultiGraphComponent) -> tuple[bool, str]:
    """Acceptability of one 3-connected component, with a descriptive label."""
    if c.kind == POLYGON:
        return True, f"polygon C{c.n}"
    if c.kind == BOND:
        return True, f"bond of multiplicity {len(c.edges)}"
    g = c.simple_graph()
    if len(set(c.edges)) != len(c.edges) or not is_3_connected(g):
        raise GraphError("malformed proper component")
    virtual = {tuple(sorted(e)) for e in c.virtual_edges()}
    for hub, rim in _wheel_hub_rim(g):
        k = len(rim)
        spokes = {tuple(sorted((hub, r))) for r in rim}
        if not virtual & spokes:
            return True, f"wheel W{k} with virtual rim edges"
        if k == 3 and virtual <= spokes:
            return True, "wheel W3 with virtual spokes"
    if g.n == 4 and _wheel_hub_rim(g):
        return False, "wheel W3 with virtual edges neither on one rim nor at one hub"
    if _wheel_hub_rim(g):
        return False, f"wheel W{g.n - 1} with a virtual spoke"
    tri = _prism_triangles(g)
    if tri is not None:
        if any(set(e) <= t for e in virtual for t in tri):
            return False, "prism with a virtual triangle edge"
        return True, "prism with virtual matching edges"
    return False, "3-connected component that is neither wheel nor prism"


def is_free_planar_structural(g: Graph) -> FreePlanarVerdict:
    blocks, _ = decompose_blocks(g)
    for block in blocks:
        h = g.induced(block)
        tree = decompose_3connected(h)
        for comp in tree.components:
            ok, label = classify_component(comp)
            if not ok:
                original = MultiGraphComponent(comp.kind, tuple(block[v] for v in comp.vertices),
                                               comp.edges, comp.virtual)
                return FreePlanarVerdict(False, "structure", ComponentWitness(tuple(block), original, label))
    return FreePlanarVerdict(True, "structure")


ROUTES = {
    "def": is_free_planar_def,
    "minors": is_free_planar_minors,
    "structure": is_free_planar_structural,
}


def is_free_planar(g: Graph) -> bool:
    return not has_minor(g, K5_MINUS) and not has_minor(g, K33_MINUS)


def check_no_xi_and_m4(g: Graph) -> bool:
    if not is_3_connected(g):
        raise GraphError("check_no_xi_and_m4 needs a 3-connected graph")
    return not has_minor(g, M4) and not has_minor(g, XI)


def is_outerplanar(g: Graph) -> bool:
    return not has_minor(g, K4) and not has_minor(g, K23)


def exists_outerplanar_edge(g: Graph) -> tuple[int, int] | None:
    for e in g.edges:
        if is_outerplanar(delete_edge(g, e)):
            return e
    return None


def reduced_kuratowski_model(g: Graph) -> MinorModel | None:
    return find_minor_model(g, K5_MINUS) or find_minor_model(g, K33_MINUS)
