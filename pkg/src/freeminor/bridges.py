"""Bridges of a cycle and extraction of reduced Kuratowski certificates.

Given a cycle ``C`` through two non-adjacent vertices ``x`` and ``y``, ``C``
splits into the open arc ``P1`` (from ``x`` to ``y`` in cycle order, taken as
clockwise) and the open arc ``P2`` (from ``y`` back to ``x``).  Each bridge
is summarised by a sextet ``[x, a, b, y, c, d]``:

* slot ``x`` (``y``) is ``T`` when ``x`` (``y``) is a leg, else ``F``;
* ``a`` / ``b``: the legs on ``P1`` nearest to ``x`` / nearest to ``y``;
* ``c`` / ``d``: the legs on ``P2`` nearest to ``y`` / nearest to ``x``;

with ``F`` where the arc carries no leg.  A bridge screens ``x`` from ``y``
when all four of ``a, b, c, d`` are legs.

If ``G + xy`` is nonplanar, some cycle carries screening bridges arranged in
one of the configurations below, each of which yields an explicit model:

* case 1: a screening bridge has both ``x`` and ``y`` as legs, and another
  bridge screens too - K5-;
* case 2: two screening bridges share the leg ``x`` (or ``y``) - K5-;
* case 4: two screening bridges joined by an alternating sequence of
  ``2k >= 0`` non-screening bridges lying on one arc (``k = 0`` is case 3) -
  K3,3-, built as a cycle avoiding ``x`` and ``y`` plus a chain through
  ``x`` and a chain through ``y`` whose ends interleave on the cycle.

Configurations outside these recipes fall back to a direct minor search.
"""

from __future__ import annotations

import enum
import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from .catalog import k33_minus, k5_minus
from .decomposition import is_2_connected
from .graph import Graph, GraphError, add_edge, bits
from .minors import MinorModel, find_minor_model, verify_minor_model
from .planarity import is_planar_fast

log = logging.getLogger(__name__)

K5_MINUS = k5_minus()
K33_MINUS = k33_minus()

CHORD = "chord"
PROPER = "proper"


class Flag(enum.Enum):
    T = "T"
    F = "F"

    def __repr__(self) -> str:
        return self.value

    __str__ = __repr__


T, F = Flag.T, Flag.F

Slot = "int | Flag"


@dataclass(frozen=True)
class BridgeRecord:
    kind: str
    interior: frozenset[int]
    legs: tuple[int, ...]
    edges: frozenset[tuple[int, int]] = field(compare=False)


@dataclass(frozen=True)
class Sextet:
    x: Slot
    a: Slot
    b: Slot
    y: Slot
    c: Slot
    d: Slot

    def as_tuple(self) -> tuple:
        return (self.x, self.a, self.b, self.y, self.c, self.d)

    def __str__(self) -> str:
        return "[" + ",".join(str(s) for s in self.as_tuple()) + "]"


@dataclass(frozen=True)
class Certificate:
    target: str  # "K5minus" | "K33minus"
    model: MinorModel
    case_used: str  # "Case1" | "Case2" | "Case4" | "Fallback"
    cycle: tuple[int, ...] = ()
    chain_length: int | None = None

    def to_text(self) -> str:
        lines = [f"target: {self.target}", f"case: {self.case_used}"]
        if self.cycle:
            lines.append(f"cycle: {' '.join(map(str, self.cycle))}")
        if self.chain_length is not None:
            lines.append(f"alternating bridges: {self.chain_length}")
        lines.append(self.model.to_text())
        return "\n".join(lines) + "\n"


def _check_cycle(g: Graph, c: Sequence[int]) -> None:
    if len(c) < 3 or len(set(c)) != len(c):
        raise GraphError("cycle must list at least 3 distinct vertices")
    for u, v in zip(c, list(c[1:]) + [c[0]]):
        if not g.has_edge(u, v):
            raise GraphError(f"cycle edge {u}-{v} not in graph")


def bridges_of_cycle(g: Graph, c: Sequence[int]) -> list[BridgeRecord]:
    """Chords and proper bridges of ``c``, legs listed in cycle order.

    Components of ``g - V(c)`` with no edge to ``c`` are not bridges and are
    skipped.
    """
    _check_cycle(g, c)
    pos = {v: i for i, v in enumerate(c)}
    on_cycle = 0
    for v in c:
        on_cycle |= 1 << v
    cycle_edges = {(min(u, v), max(u, v)) for u, v in zip(c, list(c[1:]) + [c[0]])}
    out = []
    for u, v in g.edges:
        if u in pos and v in pos and (u, v) not in cycle_edges:
            out.append(BridgeRecord(CHORD, frozenset(), tuple(sorted((u, v), key=pos.get)),
                                    frozenset({(u, v)})))
    rest = ((1 << g.n) - 1) & ~on_cycle
    seen = 0
    for s in bits(rest):
        if seen >> s & 1:
            continue
        comp = 1 << s
        frontier = comp
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & rest & ~comp
            comp |= frontier
        seen |= comp
        legs = 0
        edges = set()
        for v in bits(comp):
            legs |= g.adj[v] & on_cycle
            for w in bits(g.adj[v]):
                edges.add((min(v, w), max(v, w)))
        if not legs:
            continue
        out.append(BridgeRecord(PROPER, frozenset(bits(comp)),
                                tuple(sorted(bits(legs), key=pos.get)), frozenset(edges)))
    out.sort(key=lambda b: (tuple(pos[v] for v in b.legs), sorted(b.interior)))
    return out


def _cw(pos: dict[int, int], length: int, u: int, v: int) -> int:
    return (pos[v] - pos[u]) % length


def sextet_of(b: BridgeRecord, c: Sequence[int], x: int, y: int) -> Sextet:
    if x == y or x not in c or y not in c:
        raise GraphError("x and y must be distinct cycle vertices")
    pos = {v: i for i, v in enumerate(c)}
    L = len(c)
    span1 = _cw(pos, L, x, y)
    span2 = L - span1
    p1 = [l for l in b.legs if 0 < _cw(pos, L, x, l) < span1]
    p2 = [l for l in b.legs if 0 < _cw(pos, L, y, l) < span2]
    a = min(p1, key=lambda l: _cw(pos, L, x, l)) if p1 else F
    bb = min(p1, key=lambda l: _cw(pos, L, l, y)) if p1 else F
    cc = min(p2, key=lambda l: _cw(pos, L, y, l)) if p2 else F
    d = min(p2, key=lambda l: _cw(pos, L, l, x)) if p2 else F
    return Sextet(T if x in b.legs else F, a, bb, T if y in b.legs else F, cc, d)


def screens(s: Sextet) -> bool:
    return all(not isinstance(v, Flag) for v in (s.a, s.b, s.c, s.d))


def bridges_conflict(b1: BridgeRecord, b2: BridgeRecord, c: Sequence[int]) -> bool:
    """Whether two bridges cannot lie on the same side of ``c``.

    They fit together exactly when all legs of one lie in a single closed
    segment between cyclically consecutive legs of the other.
    """
    pos = {v: i for i, v in enumerate(c)}
    L = len(c)
    legs1 = sorted(pos[v] for v in b1.legs)
    legs2 = [pos[v] for v in b2.legs]
    if len(legs1) < 2:
        return False
    for i, start in enumerate(legs1):
        end = legs1[(i + 1) % len(legs1)]
        width = (end - start) % L or L
        if all((p - start) % L <= width for p in legs2):
            return False
    return True


def one_side_placeable(bx: BridgeRecord, by: BridgeRecord, c: Sequence[int], x: int, y: int) -> bool:
    if not (screens(sextet_of(bx, c, x, y)) and screens(sextet_of(by, c, x, y))):
        raise GraphError("one_side_placeable needs two screening bridges")
    return not bridges_conflict(bx, by, c)


@dataclass(frozen=True)
class _Frame:
    """Cycle re-read so that ``x`` sits at position 0 and arcs run in list order."""

    order: tuple[int, ...]
    x: int
    y: int

    @classmethod
    def make(cls, c: Sequence[int], x: int, y: int, reverse: bool) -> "_Frame":
        seq = list(reversed(c)) if reverse else list(c)
        i = seq.index(x)
        return cls(tuple(seq[i:] + seq[:i]), x, y)

    @property
    def pos(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.order)}

    def fwd(self, u: int, v: int) -> list[int]:
        """Cycle vertices from ``u`` forward to ``v`` inclusive."""
        pos = self.pos
        L = len(self.order)
        steps = (pos[v] - pos[u]) % L
        return [self.order[(pos[u] + k) % L] for k in range(steps + 1)]


def _frames(c: Sequence[int], x: int, y: int, bx: BridgeRecord, by: BridgeRecord):
    for swap_xy in (False, True):
        for reverse in (False, True):
            for swap_b in (False, True):
                px, py = (y, x) if swap_xy else (x, y)
                first, last = (by, bx) if swap_b else (bx, by)
                yield _Frame.make(c, px, py, reverse), first, last


def _search_chain(frame: _Frame, bridges: Sequence[BridgeRecord], first: BridgeRecord,
                  last: BridgeRecord) -> list[tuple[BridgeRecord, Sextet]] | None:
    """Shortest chain ``I_1..I_2k`` with ``a_1 < b_0 < a_2 < b_1 < ... < a_last < b_2k`` on P1."""
    c, x, y = frame.order, frame.x, frame.y
    pos = frame.pos
    s0, sl = sextet_of(first, c, x, y), sextet_of(last, c, x, y)
    if not (screens(s0) and screens(sl)) or first == last:
        return None
    if not pos[sl.d] < pos[s0.c]:
        return None
    candidates = []
    for b in bridges:
        if b == first or b == last:
            continue
        s = sextet_of(b, c, x, y)
        if s.x is F and s.y is F and s.c is F and s.d is F and not isinstance(s.a, Flag):
            candidates.append((b, s))
    a_last = pos[sl.a]
    limit = len(candidates) // 2

    def dfs(chain, prev_b, cur_b, need):
        # prev_b = b_{i-2}, cur_b = b_{i-1} as positions
        if len(chain) == need:
            return chain if prev_b < a_last < cur_b else None
        for b, s in candidates:
            if any(b == other for other, _ in chain):
                continue
            a_i, b_i = pos[s.a], pos[s.b]
            if prev_b < a_i < cur_b and b_i > cur_b:
                found = dfs(chain + [(b, s)], cur_b, b_i, need)
                if found is not None:
                    return found
        return None

    b0 = pos[s0.b]
    for k in range(limit + 1):
        found = dfs([], 0, b0, 2 * k)
        if found is not None:
            return found
    return None


def find_alternating_chain(bridges: Sequence[BridgeRecord], bx: BridgeRecord, by: BridgeRecord,
                           c: Sequence[int], x: int, y: int) -> list[BridgeRecord] | None:
    """Non-screening bridges forcing ``bx`` and ``by`` to opposite sides of ``c``.

    Returns the shortest sequence found over the symmetric readings of the
    configuration (an empty list when the two bridges conflict directly), or
    None.
    """
    if bx == by:
        return None
    best = None
    for frame, first, last in _frames(c, x, y, bx, by):
        chain = _search_chain(frame, bridges, first, last)
        if chain is not None and (best is None or len(chain) < len(best)):
            best = [b for b, _ in chain]
    return best


def _bridge_path(g: Graph, b: BridgeRecord, u: int, v: int) -> list[int]:
    """Path from leg ``u`` to leg ``v`` through the bridge."""
    if b.kind == CHORD:
        return [u, v]
    prev: dict[int, int | None] = {u: None}
    queue = deque([u])
    while queue:
        w = queue.popleft()
        for z in bits(g.adj[w]):
            if z == v and w != u:
                path = [v, w]
                while prev[path[-1]] is not None:
                    path.append(prev[path[-1]])
                return list(reversed(path))
            if z in b.interior and z not in prev:
                prev[z] = w
                queue.append(z)
    raise AssertionError("bridge legs not connected through the interior")


def _k4_model(g: Graph, ring: list[int], chain_x: list[int], x: int,
              chain_y: list[int], y: int) -> MinorModel:
    """K3,3- model from a cycle plus two crossing chains through ``x`` and ``y``.

    K3,3- (parts {0,1,2},{3,4,5} without 2-5) is K4 on 0,1,3,4 with the edges
    3-4 subdivided by 2 and 0-1 subdivided by 5.
    """
    role = {chain_x[0]: 3, chain_x[-1]: 4, chain_y[0]: 0, chain_y[-1]: 1}
    sets: dict[int, set[int]] = {p: set() for p in range(6)}
    start = ring.index(chain_x[0])
    current = None
    for k in range(len(ring)):
        v = ring[(start + k) % len(ring)]
        if v in role:
            current = role[v]
        sets[current].add(v)
    for chain, mid, label in ((chain_x, x, 2), (chain_y, y, 5)):
        i = chain.index(mid)
        sets[role[chain[0]]].update(chain[1:i])
        sets[role[chain[-1]]].update(chain[i + 1:-1])
        sets[label].add(mid)
    return MinorModel(K33_MINUS, g, tuple(frozenset(sets[p]) for p in range(6)))


def _case4_model(g: Graph, frame: _Frame, first: BridgeRecord, last: BridgeRecord,
                 chain: list[tuple[BridgeRecord, Sextet]]) -> MinorModel:
    c, x, y = frame.order, frame.x, frame.y
    s0, sl = sextet_of(first, c, x, y), sextet_of(last, c, x, y)
    fwd = frame.fwd
    k2 = len(chain)
    a = {i + 1: s.a for i, (_, s) in enumerate(chain)}
    b = {i + 1: s.b for i, (_, s) in enumerate(chain)}
    br = {i + 1: bb for i, (bb, _) in enumerate(chain)}
    b[0] = s0.b
    a_last = sl.a
    ring = _bridge_path(g, last, a_last, sl.d)
    ring += fwd(sl.d, s0.c)[1:]
    ring += _bridge_path(g, first, s0.c, s0.b)[1:]
    if k2 == 0:
        ring += list(reversed(fwd(a_last, s0.b)))[1:-1]
        chain_x = fwd(s0.c, x) + fwd(x, a_last)[1:]
        chain_y = list(reversed(fwd(y, sl.d))) + list(reversed(fwd(s0.b, y)))[1:]
    else:
        for j in range(2, k2, 2):
            ring += fwd(b[j - 2], a[j])[1:]
            ring += _bridge_path(g, br[j], a[j], b[j])[1:]
        ring += fwd(b[k2 - 2], a_last)[1:-1]
        chain_x = fwd(s0.c, x) + fwd(x, a[1])[1:]
        for j in range(1, k2, 2):
            chain_x += _bridge_path(g, br[j], a[j], b[j])[1:]
            if j + 2 < k2:
                chain_x += fwd(b[j], a[j + 2])[1:]
        chain_y = list(reversed(fwd(y, sl.d))) + list(reversed(fwd(b[k2], y)))[1:]
        chain_y += _bridge_path(g, br[k2], b[k2], a[k2])[1:]
    return _k4_model(g, ring, chain_x, x, chain_y, y)


def _interior_set(b: BridgeRecord) -> set[int]:
    return set(b.interior)


def _case1_model(g: Graph, frame: _Frame, bx: BridgeRecord, other: BridgeRecord) -> MinorModel:
    c, x, y = frame.order, frame.x, frame.y
    pos = frame.pos
    p1 = set(c[1:pos[y]])
    p2 = set(c[pos[y] + 1:])
    sets = [{x}, {y}, _interior_set(bx), p1 | _interior_set(other), p2]
    return MinorModel(K5_MINUS, g, tuple(frozenset(s) for s in sets))


def _case2_model(g: Graph, frame: _Frame, b1: BridgeRecord, b2: BridgeRecord) -> MinorModel:
    c, x, y = frame.order, frame.x, frame.y
    pos = frame.pos
    p1 = set(c[1:pos[y]])
    p2 = set(c[pos[y] + 1:])
    sets = [_interior_set(b1), _interior_set(b2), {x}, p1 | {y}, p2]
    return MinorModel(K5_MINUS, g, tuple(frozenset(s) for s in sets))


def cycles_through(g: Graph, x: int, y: int, limit: int = 20000) -> list[tuple[int, ...]]:
    """Simple cycles through ``x`` and ``y`` as sequences starting at ``x``, shortest first."""
    paths: list[tuple[int, ...]] = []
    stack = [(x, (x,), 1 << x)]
    while stack and len(paths) < limit:
        v, path, used = stack.pop()
        for w in bits(g.adj[v] & ~used):
            if w == y:
                paths.append(path + (y,))
            else:
                stack.append((w, path + (w,), used | (1 << w)))
    masks = []
    for p in paths:
        m = 0
        for v in p[1:-1]:
            m |= 1 << v
        masks.append(m)
    cycles = set()
    for i, p in enumerate(paths):
        for j in range(i + 1, len(paths)):
            if masks[i] & masks[j]:
                continue
            q = paths[j]
            if len(p) == 2 and len(q) == 2:
                continue
            cyc = p + tuple(reversed(q[1:-1]))
            alt = q + tuple(reversed(p[1:-1]))
            cycles.add(min(cyc, alt))
    return sorted(cycles, key=lambda cy: (len(cy), cy))


def certificate_on_cycle(g: Graph, cyc: tuple[int, ...], x: int, y: int) -> Certificate | None:
    bridges = bridges_of_cycle(g, cyc)
    frame = _Frame.make(cyc, x, y, False)
    sext = [sextet_of(b, cyc, x, y) for b in bridges]
    screening = [b for b, s in zip(bridges, sext) if screens(s)]
    if len(screening) < 2:
        return None
    info = {b: s for b, s in zip(bridges, sext)}
    attempts: list[tuple[str, MinorModel, int | None]] = []
    for bx in screening:
        s = info[bx]
        if s.x is T and s.y is T:
            other = next(b for b in screening if b != bx)
            attempts.append(("Case1", _case1_model(g, frame, bx, other), None))
    for i, b1 in enumerate(screening):
        for b2 in screening[i + 1:]:
            if info[b1].x is T and info[b2].x is T:
                attempts.append(("Case2", _case2_model(g, frame, b1, b2), None))
            if info[b1].y is T and info[b2].y is T:
                attempts.append(("Case2", _case2_model(g, _Frame.make(cyc, y, x, False), b1, b2), None))
    for model_case, model, k in attempts:
        if verify_minor_model(model):
            return Certificate("K5minus", model, model_case, tuple(cyc), k)
        log.debug("recipe %s failed verification on cycle %s", model_case, cyc)
    for i, b1 in enumerate(screening):
        for b2 in screening[i + 1:]:
            best = None
            for fr, first, last in _frames(cyc, x, y, b1, b2):
                chain = _search_chain(fr, bridges, first, last)
                if chain is not None and (best is None or len(chain) < len(best[3])):
                    best = (fr, first, last, chain)
            if best is None:
                continue
            model = _case4_model(g, *best)
            if verify_minor_model(model):
                return Certificate("K33minus", model, "Case4", tuple(cyc), len(best[3]))
            log.debug("case 4 recipe failed verification on cycle %s", cyc)
    return None


def extract_certificate(g: Graph, x: int, y: int) -> Certificate:
    """A verified K5- or K3,3- model in ``g``, explaining why ``g + xy`` is nonplanar."""
    if not (0 <= x < g.n and 0 <= y < g.n) or x == y or g.has_edge(x, y):
        raise GraphError("x and y must be distinct non-adjacent vertices")
    if not is_2_connected(g):
        raise GraphError("certificate extraction needs a 2-connected graph")
    if is_planar_fast(add_edge(g, (x, y))):
        raise GraphError(f"adding {x}-{y} keeps the graph planar")
    for cyc in cycles_through(g, x, y):
        cert = certificate_on_cycle(g, cyc, x, y)
        if cert is not None:
            return cert
    for target, pattern in (("K5minus", K5_MINUS), ("K33minus", K33_MINUS)):
        model = find_minor_model(g, pattern)
        if model is not None:
            log.info("fallback certificate for %s with pair %d-%d", list(g.edges), x, y)
            return Certificate(target, model, "Fallback")
    raise AssertionError("nonplanar extension but no reduced Kuratowski minor")
