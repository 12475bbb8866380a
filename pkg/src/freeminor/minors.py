"""Minor containment: decision, certificates (minor models) and their checker.

A minor model of a pattern P in a host H assigns to every pattern vertex a
nonempty, connected set of host vertices (its branch set); branch sets are
pairwise disjoint, and every pattern edge is realised by a host edge between
the corresponding branch sets.

The search grows branch sets by contracting host edges.  Vertex deletions
are never needed except for isolated vertices, since ``H - v`` is a subgraph
of ``H / uv``; edge deletions are absorbed by the final subgraph test.  Before
branching, the host is shrunk by contractions that cannot destroy a model of
the given pattern (see ``_reduce``).  Every visited host is memoised under its
canonical key, so repeated queries over an enumerated family share work.

The running time is exponential in the host size; hosts up to a dozen or so
vertices are the intended scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .graph import Graph, bits, components, contract_edge, delete_vertex, is_connected_mask
from .isomorphism import GraphSet, canonical_key

DEFAULT_CACHE_LIMIT = 1 << 20


@dataclass(frozen=True)
class MinorModel:
    pattern: Graph
    host: Graph
    branch_sets: tuple[frozenset[int], ...]

    def to_text(self) -> str:
        return "\n".join(f"{p}: {{{', '.join(map(str, sorted(s)))}}}"
                         for p, s in enumerate(self.branch_sets))


def model_from_mapping(pattern: Graph, host: Graph, sets: Mapping[int, Iterable[int]]) -> MinorModel:
    return MinorModel(pattern, host, tuple(frozenset(sets[p]) for p in range(pattern.n)))


def parse_model_text(pattern: Graph, host: Graph, text: str) -> MinorModel:
    sets: dict[int, list[int]] = {}
    for line in text.strip().splitlines():
        head, _, body = line.partition(":")
        body = body.strip().strip("{}")
        sets[int(head)] = [int(t) for t in body.split(",") if t.strip()]
    return model_from_mapping(pattern, host, sets)


def verify_minor_model(m: MinorModel) -> bool:
    """Check disjointness, connectivity and edge realisation of a model."""
    host, pattern = m.host, m.pattern
    if len(m.branch_sets) != pattern.n:
        return False
    masks = []
    used = 0
    for s in m.branch_sets:
        mask = 0
        for v in s:
            if not 0 <= v < host.n:
                return False
            mask |= 1 << v
        if not mask or mask & used:
            return False
        if not is_connected_mask(host, mask):
            return False
        used |= mask
        masks.append(mask)
    for u, v in pattern.edges:
        reach = 0
        for w in bits(masks[u]):
            reach |= host.adj[w]
        if not reach & masks[v]:
            return False
    return True


class _Pattern:
    """Precomputed data about a pattern graph."""

    def __init__(self, g: Graph):
        self.g = g
        self.n = g.n
        self.m = g.m
        self.key = canonical_key(g)
        degs = g.degrees()
        self.degrees_desc = sorted(degs, reverse=True)
        self.min_degree = min(degs) if degs else 0
        deg2 = [v for v in range(g.n) if degs[v] == 2]
        self.deg2_independent = all(not g.has_edge(a, b) for i, a in enumerate(deg2) for b in deg2[i + 1:])
        self.connected = len(components(g)) <= 1
        # match high-degree, well-connected vertices first
        order: list[int] = []
        remaining = set(range(g.n))
        while remaining:
            def score(v):
                linked = sum(1 for u in order if g.has_edge(u, v))
                return (linked, degs[v], -v)
            v = max(remaining, key=score)
            order.append(v)
            remaining.remove(v)
        self.order = order
        self.back = [[u for u in order[:i] if g.has_edge(u, v)] for i, v in enumerate(order)]
        self.degs = degs


_PATTERNS: dict[tuple[int, tuple[int, ...]], _Pattern] = {}


def _pattern(g: Graph) -> _Pattern:
    key = (g.n, g.adj)
    p = _PATTERNS.get(key)
    if p is None:
        p = _Pattern(g)
        if len(_PATTERNS) > 4096:
            _PATTERNS.clear()
        _PATTERNS[key] = p
    return p


class MinorCache:
    """Bounded memo of ``(host key, pattern key) -> bool``; reset wholesale on overflow."""

    def __init__(self, limit: int = DEFAULT_CACHE_LIMIT):
        self.limit = limit
        self.enabled = True
        self._data: dict[tuple[bytes, bytes], bool] = {}

    def get(self, key):
        if not self.enabled:
            return None
        return self._data.get(key)

    def put(self, key, value: bool) -> None:
        if not self.enabled:
            return
        if len(self._data) >= self.limit:
            self._data.clear()
        self._data[key] = value

    def clear(self) -> None:
        self._data.clear()

    def __len__(self) -> int:
        return len(self._data)


CACHE = MinorCache()


def _subgraph_map(h: Graph, p: _Pattern) -> list[int] | None:
    """Injective map of pattern vertices into host vertices preserving edges, or None."""
    if p.n > h.n or p.m > h.m:
        return None
    hdeg = h.degrees()
    if p.n:
        hd = sorted(hdeg, reverse=True)
        if any(a > b for a, b in zip(p.degrees_desc, hd)):
            return None
    order, back, pdeg = p.order, p.back, p.degs
    image = [-1] * p.n
    full = (1 << h.n) - 1
    by_degree = [0] * (h.n + 2)
    for v, d in enumerate(hdeg):
        by_degree[min(d, h.n + 1)] |= 1 << v
    at_least = [0] * (h.n + 3)
    for d in range(h.n + 1, -1, -1):
        at_least[d] = at_least[d + 1] | by_degree[d]

    def extend(i: int, used: int) -> bool:
        if i == p.n:
            return True
        v = order[i]
        cand = full & ~used & at_least[min(pdeg[v], h.n + 2)]
        for u in back[i]:
            cand &= h.adj[image[u]]
        for w in bits(cand):
            image[v] = w
            if extend(i + 1, used | (1 << w)):
                return True
        image[v] = -1
        return False

    return list(image) if extend(0, 0) else None


def _reduce(h: Graph, p: _Pattern, sets: list | None):
    """Contractions and deletions that preserve containment of ``p``.

    * no isolated pattern vertex: isolated host vertices are useless;
    * min degree >= 2: a host vertex of degree <= 1 is a leaf of its branch set;
    * min degree >= 3: a degree-2 host vertex can be merged into a neighbour;
    * min degree >= 2 with pairwise non-adjacent degree-2 pattern vertices:
      two adjacent degree-2 host vertices can be merged.
    """
    delta = p.min_degree
    if delta == 0:
        return h, sets
    changed = True
    while changed:
        changed = False
        degs = h.degrees()
        for v in range(h.n):
            d = degs[v]
            if d == 0 or (d == 1 and delta >= 2):
                h = delete_vertex(h, v)
                if sets is not None:
                    sets = sets[:v] + sets[v + 1:]
                changed = True
                break
            if d == 2 and delta >= 2:
                u = (h.adj[v] & -h.adj[v]).bit_length() - 1
                w = h.adj[v].bit_length() - 1
                if delta >= 3:
                    target = u
                elif p.deg2_independent and (degs[u] == 2 or degs[w] == 2):
                    target = u if degs[u] == 2 else w
                else:
                    continue
                a, b = min(v, target), max(v, target)
                h = contract_edge(h, (a, b))
                if sets is not None:
                    sets = sets[:a] + [sets[a] | sets[b]] + sets[a + 1:b] + sets[b + 1:]
                changed = True
                break
    return h, sets


def _quick(h: Graph, p: _Pattern) -> bool | None:
    if h.n < p.n or h.m < p.m:
        return False
    ncomp = len(components(h))
    if h.m - max(0, h.n - p.n - ncomp) < p.m:
        return False
    if _subgraph_map(h, p) is not None:
        return True
    if h.n == p.n:
        return False
    return None


def _children(h: Graph, sets: list | None):
    """Hosts one step smaller: every edge contraction and every isolated-vertex deletion."""
    for u, v in h.edges:
        child = contract_edge(h, (u, v))
        csets = None
        if sets is not None:
            csets = sets[:u] + [sets[u] | sets[v]] + sets[u + 1:v] + sets[v + 1:]
        yield child, csets
    for v in range(h.n):
        if not h.adj[v]:
            yield delete_vertex(h, v), (sets[:v] + sets[v + 1:] if sets is not None else None)


def _decide(h: Graph, p: _Pattern) -> bool:
    h, _ = _reduce(h, p, None)
    quick = _quick(h, p)
    if quick is not None:
        return quick
    if p.connected:
        comps = components(h)
        if len(comps) > 1:
            return any(_decide(h.induced(c), p) for c in comps if len(c) >= p.n)
    key = (canonical_key(h), p.key)
    cached = CACHE.get(key)
    if cached is not None:
        return cached
    result = False
    seen: set[bytes] = set()
    for child, _ in _children(h, None):
        ck = canonical_key(child)
        if ck in seen:
            continue
        seen.add(ck)
        if _decide(child, p):
            result = True
            break
    CACHE.put(key, result)
    return result


def has_minor(host: Graph, pattern: Graph) -> bool:
    """Whether ``pattern`` is a minor of ``host``."""
    return _decide(host, _pattern(pattern))


def _find(h: Graph, sets: list, p: _Pattern) -> list | None:
    h, sets = _reduce(h, p, sets)
    if h.n < p.n:
        return None
    image = _subgraph_map(h, p)
    if image is not None:
        return [sets[image[v]] for v in range(p.n)]
    if p.connected:
        comps = components(h)
        if len(comps) > 1:
            for c in comps:
                if len(c) >= p.n and _decide(h.induced(c), p):
                    return _find(h.induced(c), [sets[v] for v in c], p)
            return None
    for child, csets in _children(h, sets):
        if _decide(child, p):
            return _find(child, csets, p)
    return None


def find_minor_model(host: Graph, pattern: Graph) -> MinorModel | None:
    """A verified minor model of ``pattern`` in ``host``, or None if there is none."""
    p = _pattern(pattern)
    if not _decide(host, p):
        return None
    sets = _find(host, [frozenset([v]) for v in range(host.n)], p)
    if sets is None:
        raise AssertionError("minor search inconsistent with its own decision")
    model = MinorModel(pattern, host, tuple(sets))
    if not verify_minor_model(model):
        raise AssertionError("minor search produced an invalid model")
    return model


def identity_model(g: Graph) -> MinorModel:
    return MinorModel(g, g, tuple(frozenset([v]) for v in range(g.n)))


def is_minor_antichain(b: GraphSet) -> bool:
    members = list(b)
    return not any(i != j and has_minor(members[j], members[i])
                   for i in range(len(members)) for j in range(len(members)))


def minimal_minors(b: Iterable[Graph]) -> GraphSet:
    """Members of ``b`` with no other member of ``b`` as a proper minor."""
    members = list(b if isinstance(b, GraphSet) else GraphSet(b))
    keep = []
    for i, g in enumerate(members):
        dominated = False
        for j, h in enumerate(members):
            if i == j or h.n > g.n or h.m > g.m:
                continue
            if has_minor(g, h):
                dominated = True
                break
        if not dominated:
            keep.append(g)
    return GraphSet(keep)


def excludes_all(g: Graph, b: Iterable[Graph]) -> bool:
    """Membership of ``g`` in the minor-closed class with forbidden minors ``b``."""
    return not any(has_minor(g, h) for h in b)


def first_contained(g: Graph, b: Iterable[Graph]) -> Graph | None:
    for h in b:
        if has_minor(g, h):
            return h
    return None
