"""Obstruction sets of free classes.

For a minor-closed class A with forbidden minors B, the free class Free(A)
holds the graphs that stay in A after adding any one edge.  Its forbidden
minors are the minimal members of ``B^- ∪ B^⊙``: single-edge deletions of
members of B together with all vertex splits of members of B.  A split
replaces a vertex ``v`` by an adjacent pair ``v_L - v_R`` and hands each
former neighbour to the left half, the right half, or both; contracting the
new edge gives the original graph back.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Mapping

from .graph import Graph, add_edge, delete_edge
from .isomorphism import GraphSet
from .minors import excludes_all, is_minor_antichain, minimal_minors

LEFT, RIGHT, BOTH = "L", "R", "B"


@dataclass(frozen=True)
class SplitSpec:
    vertex: int
    assignment: Mapping[int, str]


def split_vertex(g: Graph, spec: SplitSpec) -> Graph:
    """Apply a split; ``v_L`` keeps label ``v`` and ``v_R`` becomes vertex ``n``."""
    v = spec.vertex
    right = g.n
    edges = [e for e in g.edges if v not in e]
    edges.append((v, right))
    for u in g.neighbors(v):
        side = spec.assignment[u]
        if side in (LEFT, BOTH):
            edges.append((u, v))
        if side in (RIGHT, BOTH):
            edges.append((u, right))
    return Graph.from_edges(g.n + 1, edges)


def splits_of(g: Graph, v: int) -> Iterable[SplitSpec]:
    nbrs = g.neighbors(v)
    for sides in product((LEFT, RIGHT, BOTH), repeat=len(nbrs)):
        yield SplitSpec(v, dict(zip(nbrs, sides)))


def edge_deleted_set(b: Iterable[Graph]) -> GraphSet:
    out = GraphSet()
    for g in b:
        for e in g.edges:
            out.add(delete_edge(g, e))
    return out


def vertex_split_set(b: Iterable[Graph]) -> GraphSet:
    out = GraphSet()
    for g in b:
        local = GraphSet()
        for v in range(g.n):
            for spec in splits_of(g, v):
                local.add(split_vertex(g, spec))
        out = out.union(local)
    return out


@dataclass(frozen=True)
class FreeForbiddenStages:
    deleted: GraphSet
    split: GraphSet
    edgeless: GraphSet
    result: GraphSet

    def summary(self) -> str:
        return (f"|B-| = {len(self.deleted)}, |B_split| = {len(self.split)}, "
                f"edgeless kept = {len(self.edgeless)}, |result| = {len(self.result)}")


def free_forbidden_stages(b: Iterable[Graph]) -> FreeForbiddenStages:
    members = b if isinstance(b, GraphSet) else GraphSet(b)
    if not is_minor_antichain(members):
        members = minimal_minors(members)
    deleted = edge_deleted_set(members)
    split = vertex_split_set(members)
    # an edgeless obstruction has no edge-deleted or split graph below it, so it obstructs itself
    edgeless = GraphSet(g for g in members if g.m == 0)
    result = minimal_minors(deleted.union(split).union(edgeless))
    return FreeForbiddenStages(deleted, split, edgeless, result)


def free_forbidden(b: Iterable[Graph]) -> GraphSet:
    """Forbidden minors of Free(N(b)) where N(b) excludes every member of ``b``."""
    return free_forbidden_stages(b).result


def free_class_member(g: Graph, b: Iterable[Graph]) -> bool:
    """Definitional membership of ``g`` in Free(N(b)).

    ``g`` itself must avoid ``b`` (this only matters for complete graphs) and
    so must ``g + e`` for every non-edge ``e``.
    """
    b = list(b)
    if not excludes_all(g, b):
        return False
    return all(excludes_all(add_edge(g, e), b) for e in g.non_edges())
