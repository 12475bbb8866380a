"""Named graphs used throughout the toolkit.

Catalog identifiers are short strings: ``K5``, ``K(7)``, ``C6``, ``W5``,
``M4``, ``K2,3``, ``Prism``, ``Xi``, ``K5-``, ``K33-``, ``K33``, ``Petersen``.
Vertex numbering is fixed and documented per constructor because several
certificates refer to specific vertices.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, GraphError


@dataclass(frozen=True)
class CatalogId:
    name: str
    param: int | tuple[int, int] | None = None

    def __str__(self) -> str:
        if self.param is None:
            return self.name
        if isinstance(self.param, tuple):
            return f"{self.name}({self.param[0]},{self.param[1]})"
        return f"{self.name}({self.param})"


def complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def wheel(k: int) -> Graph:
    """Rim ``0..k-1`` in cyclic order, hub ``k``."""
    if k < 3:
        raise GraphError("wheel needs a rim of at least 3 vertices")
    rim = [(i, (i + 1) % k) for i in range(k)]
    return Graph.from_edges(k + 1, rim + [(i, k) for i in range(k)])


def prism() -> Graph:
    """Triangles ``0,1,2`` and ``3,4,5`` joined by the matching ``i - i+3``."""
    return Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5),
                                (0, 3), (1, 4), (2, 5)])


def multiedge(i: int) -> Graph:
    """The i-multiedge: terminals 0 and 1, the plain edge 0-1, and paths 0-j-1 for j = 2..i."""
    if i < 1:
        raise GraphError("multiedge multiplicity must be at least 1")
    edges = [(0, 1)]
    for j in range(2, i + 1):
        edges += [(0, j), (j, 1)]
    return Graph.from_edges(i + 1, edges)


def xi() -> Graph:
    """K2,3 with a pendant edge on a degree-2 vertex.

    x=0 and y=1 have degree 3; u=2, v=3, s=4 are the degree-2 vertices of K2,3;
    t=5 hangs from s.
    """
    edges = [(a, b) for a in (0, 1) for b in (2, 3, 4)] + [(4, 5)]
    return Graph.from_edges(6, edges)


def k5_minus() -> Graph:
    """K5 without the edge 0-1."""
    return Graph.from_edges(5, [e for e in combinations(range(5), 2) if e != (0, 1)])


def k33() -> Graph:
    """Parts ``{0,1,2}`` and ``{3,4,5}``."""
    return complete_bipartite(3, 3)


def k33_minus() -> Graph:
    """K3,3 without the edge 2-5; vertices 2 and 5 have degree 2."""
    return Graph.from_edges(6, [(i, j) for i in range(3) for j in range(3, 6) if (i, j) != (2, 5)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return Graph.from_edges(10, outer + inner + spokes)


_FIXED = {
    "prism": prism,
    "xi": xi,
    "k5-": k5_minus,
    "k5minus": k5_minus,
    "k33-": k33_minus,
    "k3,3-": k33_minus,
    "k33minus": k33_minus,
    "k33": k33,
    "k3,3": k33,
    "petersen": petersen,
}

_PARAM = re.compile(r"^(k|c|w|wheel|m|p)\(?(\d+)\)?$")
_BIPARTITE = re.compile(r"^k\(?(\d+),(\d+)\)?$")


def parse_catalog_id(text: str) -> CatalogId:
    s = text.strip().lower().replace(" ", "")
    if s in _FIXED:
        canonical = {"k5-": "K5minus", "k5minus": "K5minus", "k33-": "K33minus",
                     "k3,3-": "K33minus", "k33minus": "K33minus", "k33": "K33",
                     "k3,3": "K33", "prism": "Prism", "xi": "Xi", "petersen": "Petersen"}
        return CatalogId(canonical[s])
    m = _BIPARTITE.match(s)
    if m:
        return CatalogId("Kab", (int(m.group(1)), int(m.group(2))))
    m = _PARAM.match(s)
    if m:
        kind = {"k": "K", "c": "C", "w": "Wheel", "wheel": "Wheel", "m": "M", "p": "P"}[m.group(1)]
        return CatalogId(kind, int(m.group(2)))
    raise GraphError(f"unknown catalog graph {text!r}")


def make_catalog(ident: CatalogId | str) -> Graph:
    if isinstance(ident, str):
        ident = parse_catalog_id(ident)
    name, p = ident.name, ident.param
    if name == "K":
        if p is None or p < 0:
            raise GraphError("K(n) needs n >= 0")
        return complete(p)
    if name == "C":
        return cycle(p)
    if name == "P":
        if p is None or p < 1:
            raise GraphError("P(n) needs n >= 1")
        return path(p)
    if name == "Wheel":
        return wheel(p)
    if name == "M":
        return multiedge(p)
    if name == "Kab":
        return complete_bipartite(*p)
    builders = {"Prism": prism, "Xi": xi, "K5minus": k5_minus, "K33minus": k33_minus,
                "K5": lambda: complete(5), "K33": k33, "Petersen": petersen}
    if name in builders and p is None:
        return builders[name]()
    raise GraphError(f"invalid catalog id {ident}")
