"""Exhaustive enumeration of graphs up to isomorphism.

Graphs on ``n`` vertices are grown from those on ``n - 1`` by appending one
vertex with every possible neighbourhood, keeping the first graph seen for
each canonical key.  Connected graphs only need connected parents because
every connected graph has a vertex whose removal leaves it connected.
Results are canonical graphs sorted by canonical key and memoised per
process.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .graph import Graph, GraphError
from .isomorphism import canonical_key, graph_from_key

MAX_ENUMERATION = 8


@lru_cache(maxsize=None)
def _level(n: int, connected: bool) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1),)
    parents = _level(n - 1, connected)
    keys: set[bytes] = set()
    new = n - 1
    low = 1 if connected else 0
    for p in parents:
        base = p.adj
        for nb in range(low, 1 << new):
            adj = [row | ((nb >> v & 1) << new) for v, row in enumerate(base)]
            adj.append(nb)
            keys.add(canonical_key(Graph._trusted(n, tuple(adj))))
    return tuple(graph_from_key(k) for k in sorted(keys))


def enumerate_graphs(n: int, connected_only: bool = False) -> Iterator[Graph]:
    """One canonical representative per isomorphism class on exactly ``n`` vertices."""
    if not 1 <= n <= MAX_ENUMERATION:
        raise GraphError(f"enumeration supports 1 <= n <= {MAX_ENUMERATION}, got {n}")
    return iter(_level(n, connected_only))


def enumerate_up_to(max_n: int, connected_only: bool = False) -> Iterator[Graph]:
    for n in range(1, max_n + 1):
        yield from enumerate_graphs(n, connected_only)
