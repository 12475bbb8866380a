"""Planarity by two independent routes.

``is_planar_minor`` excludes the Kuratowski minors K5 and K3,3 with the minor
engine.  ``is_planar_fast`` runs the Demoucron-Malgrange-Pertuiset
path-embedding algorithm on every block: embed a cycle, then repeatedly take
a fragment that fits in the fewest faces and route one of its paths through
such a face.  A fragment with no admissible face proves nonplanarity.
"""

from __future__ import annotations

from collections import deque

from .catalog import complete, k33
from .decomposition import decompose_blocks
from .graph import Graph, bits
from .minors import MinorModel, find_minor_model, has_minor

K5 = complete(5)
K33 = k33()


def is_planar_minor(g: Graph) -> bool:
    return not has_minor(g, K5) and not has_minor(g, K33)


def kuratowski_certificate(g: Graph) -> MinorModel | None:
    """A verified K5 or K3,3 model in ``g``; None iff ``g`` is planar."""
    return find_minor_model(g, K5) or find_minor_model(g, K33)


def is_planar_fast(g: Graph) -> bool:
    if g.n >= 3 and g.m > 3 * g.n - 6:
        return False
    blocks, _ = decompose_blocks(g)
    return all(_embeddable(g.induced(b)) for b in blocks)


def _find_cycle(h: Graph) -> list[int]:
    parent = {0: -1}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in h.neighbors(v):
            if w == parent[v]:
                continue
            if w in parent:
                # back edge v-w closes a cycle through the DFS tree
                path_v = [v]
                while path_v[-1] != -1:
                    path_v.append(parent[path_v[-1]])
                path_w = [w]
                while path_w[-1] != -1:
                    path_w.append(parent[path_w[-1]])
                anc = set(path_w)
                top = next(x for x in path_v if x in anc)
                cyc = path_v[:path_v.index(top) + 1]
                cyc += list(reversed(path_w[:path_w.index(top)]))
                return cyc
            parent[w] = v
            stack.append(w)
    raise ValueError("graph is acyclic")


def _fragments(h: Graph, placed: int, placed_edges: set[tuple[int, int]]):
    """Fragments of ``h`` relative to the embedded part: (attachments, path-finder data)."""
    out = []
    for u in bits(placed):
        for v in bits(h.adj[u] & placed):
            if u < v and (u, v) not in placed_edges:
                out.append(((1 << u) | (1 << v), ("edge", u, v)))
    rest = ((1 << h.n) - 1) & ~placed
    seen = 0
    for s in bits(rest):
        if seen >> s & 1:
            continue
        comp = 1 << s
        frontier = comp
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= h.adj[v]
            frontier = nxt & rest & ~comp
            comp |= frontier
        seen |= comp
        attach = 0
        for v in bits(comp):
            attach |= h.adj[v] & placed
        out.append((attach, ("comp", comp)))
    return out


def _fragment_path(h: Graph, attach: int, data) -> list[int]:
    if data[0] == "edge":
        return [data[1], data[2]]
    comp = data[1]
    atts = list(bits(attach))
    a = atts[0]
    # BFS from a through the fragment interior to any other attachment
    prev = {a: None}
    queue = deque([a])
    while queue:
        v = queue.popleft()
        for w in bits(h.adj[v]):
            if w in prev:
                continue
            if comp >> w & 1:
                prev[w] = v
                queue.append(w)
            elif w != a and attach >> w & 1 and v != a:
                path = [w, v]
                while prev[path[-1]] is not None:
                    path.append(prev[path[-1]])
                return list(reversed(path))
    raise AssertionError("fragment of a 2-connected graph has fewer than two attachments")


def _embeddable(h: Graph) -> bool:
    """DMP on a 2-connected graph."""
    if h.m > 3 * h.n - 6:
        return False
    cyc = _find_cycle(h)
    placed = 0
    for v in cyc:
        placed |= 1 << v
    placed_edges = {(min(a, b), max(a, b)) for a, b in zip(cyc, cyc[1:] + cyc[:1])}
    faces = [list(cyc), list(reversed(cyc))]
    while True:
        frags = _fragments(h, placed, placed_edges)
        if not frags:
            return True
        masks = []
        for f in faces:
            mk = 0
            for v in f:
                mk |= 1 << v
            masks.append(mk)
        choice = None
        for attach, data in frags:
            admissible = [i for i, mk in enumerate(masks) if attach & ~mk == 0]
            if not admissible:
                return False
            if choice is None or len(admissible) < len(choice[2]):
                choice = (attach, data, admissible)
        attach, data, admissible = choice
        path = _fragment_path(h, attach, data)
        fi = admissible[0]
        face = faces[fi]
        a, b = path[0], path[-1]
        ia = face.index(a)
        rot = face[ia:] + face[:ia]
        ib = rot.index(b)
        inner = path[1:-1]
        f1 = rot[:ib + 1] + list(reversed(inner))
        f2 = rot[ib:] + [a] + inner
        faces[fi:fi + 1] = [f1, f2]
        for v in inner:
            placed |= 1 << v
        for x, y in zip(path, path[1:]):
            placed_edges.add((min(x, y), max(x, y)))
