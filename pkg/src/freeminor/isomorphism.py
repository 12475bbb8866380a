"""Canonical forms, isomorphism testing and isomorphism-deduplicated graph sets.

The canonical form is the lexicographically smallest adjacency table over all
labellings reachable by an individualisation-refinement search.  Refinement
(equitable partitions) and two automorphism prunings keep the search small:
interchangeable twins in a target cell are explored once, and automorphisms
discovered at equal leaves collapse orbits of the pointwise stabiliser of the
current prefix.  Adequate for the desk-scale graphs this toolkit targets.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator

from .graph import Graph, bits


def _refine(adj: tuple[int, ...], cells: list[list[int]], splitters: Iterable[int]) -> list[list[int]]:
    cells = [c for c in cells]
    queue = deque(splitters)
    while queue:
        smask = queue.popleft()
        i = 0
        while i < len(cells):
            cell = cells[i]
            if len(cell) == 1:
                i += 1
                continue
            counts = [(adj[v] & smask).bit_count() for v in cell]
            lo = min(counts)
            if lo == max(counts):
                i += 1
                continue
            groups: dict[int, list[int]] = {}
            for v, c in zip(cell, counts):
                groups.setdefault(c, []).append(v)
            pieces = [groups[c] for c in sorted(groups)]
            cells[i:i + 1] = pieces
            for p in pieces:
                mask = 0
                for v in p:
                    mask |= 1 << v
                queue.append(mask)
            i += len(pieces)
    return cells


def _leaf_code(adj: tuple[int, ...], order: list[int]) -> tuple[int, ...]:
    pos = [0] * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    rows = []
    for v in order:
        r = 0
        for u in bits(adj[v]):
            r |= 1 << pos[u]
        rows.append(r)
    return tuple(rows)


def _orbit_reps(candidates: list[int], autos: list[list[int]], prefix: list[int]) -> list[int]:
    fixing = [a for a in autos if all(a[p] == p for p in prefix)]
    if not fixing:
        return candidates
    parent = {v: v for v in candidates}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for a in fixing:
        for v in candidates:
            w = a[v]
            if w in parent:
                rv, rw = find(v), find(w)
                if rv != rw:
                    parent[max(rv, rw)] = min(rv, rw)
    seen = set()
    reps = []
    for v in candidates:
        r = find(v)
        if r not in seen:
            seen.add(r)
            reps.append(v)
    return reps


def canonical_labeling(g: Graph) -> tuple[list[int], tuple[int, ...]]:
    """Return ``(order, code)``: ``order[i]`` is the vertex given canonical label ``i``."""
    n = g.n
    if n == 0:
        return [], ()
    adj = g.adj
    by_degree: dict[int, list[int]] = {}
    for v in range(n):
        by_degree.setdefault(adj[v].bit_count(), []).append(v)
    cells = [by_degree[d] for d in sorted(by_degree)]
    full = (1 << n) - 1
    start = _refine(adj, cells, [full] + [sum(1 << v for v in c) for c in cells])

    best: list = [None, None]  # code, order
    autos: list[list[int]] = []

    def search(cells: list[list[int]], prefix: list[int]) -> None:
        target = None
        for idx, c in enumerate(cells):
            if len(c) > 1 and (target is None or len(c) < len(cells[target])):
                target = idx
        if target is None:
            order = [c[0] for c in cells]
            code = _leaf_code(adj, order)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, order
            elif code == best[0]:
                # order -> best order is an automorphism
                a = [0] * n
                for i, v in enumerate(order):
                    a[v] = best[1][i]
                autos.append(a)
            return
        cell = cells[target]
        reps = []
        for v in cell:
            rv = adj[v] & ~(1 << v)
            if not any((adj[u] & ~(1 << v)) == (rv & ~(1 << u)) for u in reps):
                reps.append(v)
        tried: list[int] = []
        for v in reps:
            if autos and v not in _orbit_reps(tried + [v], autos, prefix):
                continue
            rest = [u for u in cell if u != v]
            new_cells = cells[:target] + [[v], rest] + cells[target + 1:]
            search(_refine(adj, new_cells, [1 << v]), prefix + [v])
            tried.append(v)

    search(start, [])
    return best[1], best[0]


def canonical_graph(g: Graph) -> Graph:
    order, _ = canonical_labeling(g)
    perm = [0] * g.n
    for i, v in enumerate(order):
        perm[v] = i
    return g.relabel(perm)


def canonical_key(g: Graph) -> bytes:
    """Byte string equal for two graphs iff they are isomorphic."""
    _, code = canonical_labeling(g)
    return bytes([g.n]) + b"".join(r.to_bytes(4, "little") for r in code)


def graph_from_key(key: bytes) -> Graph:
    n = key[0]
    rows = tuple(int.from_bytes(key[1 + 4 * i:5 + 4 * i], "little") for i in range(n))
    return Graph._trusted(n, rows)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_key(g) == canonical_key(h)


class GraphSet:
    """Collection of pairwise non-isomorphic graphs, iterated in canonical-key order.

    Members are stored in canonical labelling, so equal sets compare and print
    identically regardless of how their members were produced.
    """

    def __init__(self, graphs: Iterable[Graph] = ()):
        self._members: dict[bytes, Graph] = {}
        for g in graphs:
            self.add(g)

    def add(self, g: Graph) -> bool:
        """Insert ``g`` unless an isomorphic copy is present; return whether inserted."""
        key = canonical_key(g)
        if key in self._members:
            return False
        self._members[key] = graph_from_key(key)
        return True

    def __contains__(self, g: Graph) -> bool:
        return canonical_key(g) in self._members

    def __len__(self) -> int:
        return len(self._members)

    def __iter__(self) -> Iterator[Graph]:
        for key in sorted(self._members):
            yield self._members[key]

    def keys(self) -> list[bytes]:
        return sorted(self._members)

    def union(self, other: "GraphSet") -> "GraphSet":
        out = GraphSet()
        out._members = dict(self._members)
        out._members.update(other._members)
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GraphSet):
            return NotImplemented
        return self._members.keys() == other._members.keys()

    def __repr__(self) -> str:
        return f"GraphSet({list(self)})"
