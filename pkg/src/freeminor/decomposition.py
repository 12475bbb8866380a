"""Connectivity predicates, block splitting, and 3-connected component decomposition.

The decomposition follows the classical split-and-merge scheme: bundles of
parallel edges are split off as bonds, separation pairs split the remaining
multigraph into two halves joined by a fresh pair of virtual edges, and once
nothing splits any more, bonds sharing a virtual edge are merged with bonds,
polygons with polygons.  The result is the unique set of 3-connected
components.  Components keep original vertex ids, so gluing them back is a
union of their real edges.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations

from .graph import Graph, GraphError, bits, components, delete_vertex

POLYGON = "polygon"
BOND = "bond"
PROPER = "proper"


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def _without(g: Graph, removed: tuple[int, ...]) -> Graph:
    for v in sorted(removed, reverse=True):
        g = delete_vertex(g, v)
    return g


def cut_vertices(g: Graph) -> set[int]:
    base = len(components(g))
    return {v for v in range(g.n) if g.adj[v] and len(components(delete_vertex(g, v))) > base}


def is_k_connected(g: Graph, k: int) -> bool:
    """More than ``k`` vertices and no separating set of fewer than ``k`` vertices."""
    if g.n <= k:
        return False
    for size in range(k):
        for removed in combinations(range(g.n), size):
            if not is_connected(_without(g, removed)):
                return False
    return True


def is_2_connected(g: Graph) -> bool:
    return is_k_connected(g, 2)


def is_3_connected(g: Graph) -> bool:
    return is_k_connected(g, 3)


def is_properly_3_connected(g: Graph) -> bool:
    # Graph is simple by construction, so this is 3-connectivity on >= 4 vertices.
    return g.n >= 4 and is_3_connected(g)


def decompose_blocks(g: Graph) -> tuple[list[list[int]], list[tuple[int, int]]]:
    """Split ``g`` into 2-connected blocks (sorted vertex lists) and bridge edges.

    Isolated vertices belong to neither list.
    """
    index = [-1] * g.n
    low = [0] * g.n
    counter = 0
    blocks: list[list[int]] = []
    bridges: list[tuple[int, int]] = []
    for root in range(g.n):
        if index[root] >= 0 or not g.adj[root]:
            continue
        index[root] = low[root] = counter
        counter += 1
        edge_stack: list[tuple[int, int]] = []
        stack = [(root, -1, iter(g.neighbors(root)))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if index[w] < 0:
                    edge_stack.append((v, w))
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append((w, v, iter(g.neighbors(w))))
                    advanced = True
                    break
                if index[w] < index[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            stack.pop()
            if parent < 0:
                continue
            low[parent] = min(low[parent], low[v])
            if low[v] >= index[parent]:
                chunk = []
                while True:
                    e = edge_stack.pop()
                    chunk.append(e)
                    if e == (parent, v):
                        break
                if len(chunk) == 1:
                    bridges.append((min(parent, v), max(parent, v)))
                else:
                    blocks.append(sorted({x for e in chunk for x in e}))
    blocks.sort()
    bridges.sort()
    return blocks, bridges


@dataclass(frozen=True)
class MultiGraphComponent:
    """One node of the decomposition.

    ``vertices[i]`` is the original id of local vertex ``i``; ``edges`` use
    local ids; ``virtual[j]`` is the virtual-edge label of edge ``j`` or None.
    """

    kind: str
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    virtual: tuple[int | None, ...]

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def virtual_flags(self) -> tuple[bool, ...]:
        return tuple(t is not None for t in self.virtual)

    def virtual_edges(self) -> list[tuple[int, int]]:
        return [e for e, t in zip(self.edges, self.virtual) if t is not None]

    def simple_graph(self) -> Graph:
        """All edges, virtual included, as a simple graph (not meaningful for bonds)."""
        return Graph.from_edges(self.n, set(tuple(sorted(e)) for e in self.edges))


@dataclass
class ComponentTree:
    components: list[MultiGraphComponent]
    pairing: dict[tuple[int, int], tuple[int, int]] = field(default_factory=dict)

    def glue(self) -> Graph:
        """Reassemble the graph: every real edge, in original vertex ids."""
        verts = sorted({v for c in self.components for v in c.vertices})
        index = {v: i for i, v in enumerate(verts)}
        edges = []
        for c in self.components:
            for (a, b), t in zip(c.edges, c.virtual):
                if t is None:
                    edges.append((index[c.vertices[a]], index[c.vertices[b]]))
        return Graph.from_edges(len(verts), edges)

    def report(self) -> str:
        lines = []
        for i, c in enumerate(self.components):
            lines.append(f"component {i}: {c.kind} on {list(c.vertices)}")
            for j, ((a, b), t) in enumerate(zip(c.edges, c.virtual)):
                u, v = c.vertices[a], c.vertices[b]
                if t is None:
                    lines.append(f"  {u}-{v}")
                else:
                    oc, oe = self.pairing[(i, j)]
                    lines.append(f"  {u}-{v} v{t} -> component {oc}")
        return "\n".join(lines) + "\n"


_Edge = tuple[int, int, "int | None"]


def _separation_classes(edges: list[_Edge], a: int, b: int) -> list[list[int]]:
    parent = list(range(len(edges)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    first: dict[int, int] = {}
    for i, (u, v, _) in enumerate(edges):
        for w in (u, v):
            if w == a or w == b:
                continue
            if w in first:
                ri, rj = find(i), find(first[w])
                if ri != rj:
                    parent[ri] = rj
            else:
                first[w] = i
    groups: dict[int, list[int]] = defaultdict(list)
    for i in range(len(edges)):
        groups[find(i)].append(i)
    return sorted(groups.values())


def _split_once(edges: list[_Edge], fresh) -> tuple[list[_Edge], list[_Edge]] | None:
    bundles: dict[tuple[int, int], list[int]] = defaultdict(list)
    for i, (u, v, _) in enumerate(edges):
        bundles[(min(u, v), max(u, v))].append(i)
    for (u, v), idx in sorted(bundles.items()):
        if 2 <= len(idx) < len(edges):
            t = fresh()
            chosen = set(idx)
            bond = [edges[i] for i in idx] + [(u, v, t)]
            rest = [e for i, e in enumerate(edges) if i not in chosen] + [(u, v, t)]
            return bond, rest
    verts = sorted({w for e in edges for w in e[:2]})
    if len(verts) <= 3:
        return None
    for a, b in combinations(verts, 2):
        classes = _separation_classes(edges, a, b)
        if len(classes) < 2:
            continue
        heavy = [c for c in classes if not (len(c) == 1 and set(edges[c[0]][:2]) == {a, b})]
        if len(classes) == 2 and len(heavy) == 1:
            continue
        t = fresh()
        part = set(heavy[0])
        one = [edges[i] for i in sorted(part)] + [(a, b, t)]
        two = [e for i, e in enumerate(edges) if i not in part] + [(a, b, t)]
        return one, two
    return None


def _kind(edges: list[_Edge]) -> str:
    verts = {w for e in edges for w in e[:2]}
    if len(verts) == 2:
        return BOND
    deg: dict[int, int] = defaultdict(int)
    for u, v, _ in edges:
        deg[u] += 1
        deg[v] += 1
    if all(d == 2 for d in deg.values()) and len(edges) == len(verts):
        return POLYGON
    return PROPER


def decompose_3connected(g: Graph) -> ComponentTree:
    """3-connected components of a 2-connected graph with at least 3 vertices."""
    if g.n < 3 or not is_2_connected(g):
        raise GraphError("decomposition needs a 2-connected graph on at least 3 vertices")
    counter = [0]

    def fresh() -> int:
        counter[0] += 1
        return counter[0]

    pending: list[list[_Edge]] = [[(u, v, None) for u, v in g.edges]]
    done: list[list[_Edge]] = []
    while pending:
        edges = pending.pop()
        split = _split_once(edges, fresh)
        if split is None:
            done.append(edges)
        else:
            pending.extend(split)

    kinds = [_kind(c) for c in done]
    merged = True
    while merged:
        merged = False
        owner: dict[int, list[int]] = defaultdict(list)
        for ci, c in enumerate(done):
            for _, _, t in c:
                if t is not None:
                    owner[t].append(ci)
        for t in sorted(owner):
            i, j = owner[t]
            if kinds[i] == kinds[j] and kinds[i] in (BOND, POLYGON):
                combined = [e for e in done[i] if e[2] != t] + [e for e in done[j] if e[2] != t]
                done = [c for k, c in enumerate(done) if k not in (i, j)] + [combined]
                kinds = [k_ for k, k_ in enumerate(kinds) if k not in (i, j)] + [kinds[i]]
                merged = True
                break

    comps = []
    for edges, kind in sorted(zip(done, kinds), key=lambda ck: (sorted({w for e in ck[0] for w in e[:2]}), len(ck[0]))):
        verts = sorted({w for e in edges for w in e[:2]})
        index = {v: i for i, v in enumerate(verts)}
        ordered = sorted(edges, key=lambda e: (min(e[0], e[1]), max(e[0], e[1]), e[2] is not None, e[2] or 0))
        comps.append(MultiGraphComponent(
            kind=kind,
            vertices=tuple(verts),
            edges=tuple((index[min(u, v)], index[max(u, v)]) for u, v, _ in ordered),
            virtual=tuple(t for _, _, t in ordered),
        ))
    # relabel virtual edges 1.. in order of first appearance for stable output
    relabel: dict[int, int] = {}
    for c in comps:
        for t in c.virtual:
            if t is not None and t not in relabel:
                relabel[t] = len(relabel) + 1
    comps = [MultiGraphComponent(c.kind, c.vertices, c.edges,
                                 tuple(None if t is None else relabel[t] for t in c.virtual))
             for c in comps]
    where: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for ci, c in enumerate(comps):
        for ei, t in enumerate(c.virtual):
            if t is not None:
                where[t].append((ci, ei))
    pairing = {}
    for t, locs in where.items():
        if len(locs) != 2:
            raise AssertionError(f"virtual edge {t} appears {len(locs)} times")
        pairing[locs[0]] = locs[1]
        pairing[locs[1]] = locs[0]
    return ComponentTree(comps, pairing)
