"""Simple undirected graphs on vertices ``0..n-1`` stored as adjacency bitmasks.

Graphs are immutable; every mutation primitive returns a new graph.  The
primitives mirror the minor operations: vertex deletion, edge deletion and
edge contraction, plus edge addition and subdivision.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 32

Edge = tuple[int, int]


class GraphError(ValueError):
    """Raised when a graph operation's precondition is violated."""


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable simple graph.

    ``adj[v]`` is an integer whose bit ``u`` is set iff ``uv`` is an edge.
    """

    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, adj: Sequence[int] | None = None):
        if not 0 <= n <= MAX_VERTICES:
            raise GraphError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        if adj is None:
            adj = (0,) * n
        adj = tuple(adj)
        if len(adj) != n:
            raise GraphError("adjacency length does not match vertex count")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbour out of range")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in _bits(row):
                if not adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _trusted(cls, n: int, adj: tuple[int, ...]) -> "Graph":
        # Internal fast path: caller guarantees a valid symmetric loop-free table.
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        object.__setattr__(g, "_hash", None)
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        if not 0 <= n <= MAX_VERTICES:
            raise GraphError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        adj = [0] * n
        for e in edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}-{v} has an endpoint out of range")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if adj[u] >> v & 1:
                raise GraphError(f"parallel edge {u}-{v}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls._trusted(n, tuple(adj))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.n, self.adj))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self) -> str:
        return f"Graph({self.n}, {list(self.edges)})"

    def __reduce__(self):
        return (Graph._trusted, (self.n, self.adj))

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    @property
    def edges(self) -> tuple[Edge, ...]:
        out = []
        for u, row in enumerate(self.adj):
            for v in _bits(row >> (u + 1)):
                out.append((u, u + 1 + v))
        return tuple(out)

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool(self.adj[u] >> v & 1)

    def non_edges(self) -> list[Edge]:
        out = []
        for u in range(self.n):
            missing = ~self.adj[u] & ((1 << self.n) - 1) & ~((1 << (u + 1)) - 1)
            out.extend((u, v) for v in _bits(missing))
        return out

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabelling is not a permutation")
        adj = [0] * self.n
        for v, row in enumerate(self.adj):
            new = 0
            for u in _bits(row):
                new |= 1 << perm[u]
            adj[perm[v]] = new
        return Graph._trusted(self.n, tuple(adj))

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Subgraph induced on ``vertices``, renumbered in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        adj = []
        for v in vertices:
            row = 0
            for u in _bits(self.adj[v]):
                i = index.get(u)
                if i is not None:
                    row |= 1 << i
            adj.append(row)
        return Graph._trusted(len(vertices), tuple(adj))


def _norm(g: Graph, e: Sequence[int]) -> Edge:
    u, v = e
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise GraphError(f"edge {u}-{v} has an endpoint out of range")
    return (u, v) if u < v else (v, u)


def _remove_bit(row: int, v: int) -> int:
    """Drop bit ``v`` and shift higher bits down by one."""
    low = row & ((1 << v) - 1)
    return low | ((row >> (v + 1)) << v)


def delete_vertex(g: Graph, v: int) -> Graph:
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range")
    adj = tuple(_remove_bit(row, v) for i, row in enumerate(g.adj) if i != v)
    return Graph._trusted(g.n - 1, adj)


def delete_edge(g: Graph, e: Sequence[int]) -> Graph:
    u, v = _norm(g, e)
    if not g.adj[u] >> v & 1:
        raise GraphError(f"edge {u}-{v} not present")
    adj = list(g.adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    return Graph._trusted(g.n, tuple(adj))


def add_edge(g: Graph, e: Sequence[int]) -> Graph:
    u, v = _norm(g, e)
    if u == v:
        raise GraphError("cannot add a loop")
    if g.adj[u] >> v & 1:
        raise GraphError(f"edge {u}-{v} already present")
    adj = list(g.adj)
    adj[u] |= 1 << v
    adj[v] |= 1 << u
    return Graph._trusted(g.n, tuple(adj))


def add_vertex(g: Graph, neighbors: Iterable[int] = ()) -> Graph:
    """Append vertex ``n`` joined to ``neighbors``."""
    if g.n >= MAX_VERTICES:
        raise GraphError("vertex limit reached")
    w = g.n
    adj = list(g.adj)
    row = 0
    for u in neighbors:
        if not 0 <= u < g.n:
            raise GraphError(f"vertex {u} out of range")
        adj[u] |= 1 << w
        row |= 1 << u
    adj.append(row)
    return Graph._trusted(g.n + 1, tuple(adj))


def subdivide_edge(g: Graph, e: Sequence[int]) -> Graph:
    """Replace ``uv`` by a path ``u-w-v`` through a new last vertex ``w``."""
    u, v = _norm(g, e)
    if not g.adj[u] >> v & 1:
        raise GraphError(f"edge {u}-{v} not present")
    return add_vertex(delete_edge(g, (u, v)), (u, v))


def contract_edge(g: Graph, e: Sequence[int]) -> Graph:
    """Merge the endpoints of ``e``; the merged vertex keeps the smaller label.

    Parallel edges collapse and the loop vanishes, so the result is simple.
    Vertices above the larger endpoint shift down by one.
    """
    u, v = _norm(g, e)
    if not g.adj[u] >> v & 1:
        raise GraphError(f"edge {u}-{v} not present")
    return _merge(g, u, v)


def _merge(g: Graph, u: int, v: int) -> Graph:
    # u < v; v's neighbours move to u, then v is removed.
    adj = list(g.adj)
    merged = (adj[u] | adj[v]) & ~(1 << u) & ~(1 << v)
    bu, bv = 1 << u, 1 << v
    for w in _bits(adj[v]):
        adj[w] = (adj[w] & ~bv) | bu
    adj[u] = merged
    for w in _bits(merged):
        adj[w] |= bu
    del adj[v]
    return Graph._trusted(g.n - 1, tuple(_remove_bit(row, v) for row in adj))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph._trusted(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.n
    adj = g.adj + tuple(row << shift for row in h.adj)
    return Graph(g.n + h.n, adj)


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest vertex."""
    seen = 0
    out = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = 1 << s
        frontier = comp
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(list(_bits(comp)))
    return out


def is_connected_mask(g: Graph, mask: int) -> bool:
    """Whether the subgraph induced by the vertex set ``mask`` is connected (and nonempty)."""
    if not mask:
        return False
    start = mask & -mask
    reach = start
    frontier = start
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & mask & ~reach
        reach |= frontier
    return reach == mask


def bits(mask: int) -> Iterator[int]:
    return _bits(mask)
