"""graph6 encoding plus a plain edge-list alternative (``n m`` then ``u v`` lines)."""

from __future__ import annotations

import re
from typing import Iterator

from .graph import MAX_VERTICES, Graph

HEADER = ">>graph6<<"


class GraphFormatError(ValueError):
    def __init__(self, message: str, offset: int | None = None, line: int | None = None):
        self.offset = offset
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if offset is not None:
            where.append(f"byte {offset}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)


def write_graph6(g: Graph) -> str:
    n = g.n
    out = [chr(63 + n)]
    acc = 0
    nbits = 0
    for j in range(1, n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.rstrip("\r\n")
    base = 0
    if s.startswith(HEADER):
        s = s[len(HEADER):]
        base = len(HEADER)
    if not s:
        raise GraphFormatError("empty graph6 string", base)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"invalid graph6 character {ch!r}", base + i)
    if s[0] == "~":
        if len(s) >= 2 and s[1] == "~":
            raise GraphFormatError("graph too large for this toolkit", base)
        if len(s) < 4:
            raise GraphFormatError("truncated size header", base + len(s))
        n = 0
        for ch in s[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        pos = 4
        if n < 63:
            raise GraphFormatError("non-canonical size header", base)
    else:
        n = ord(s[0]) - 63
        pos = 1
    if n > MAX_VERTICES:
        raise GraphFormatError(f"{n} vertices exceeds limit {MAX_VERTICES}", base)
    need = n * (n - 1) // 2
    nchars = (need + 5) // 6
    body = s[pos:]
    if len(body) != nchars:
        off = base + pos + min(len(body), nchars)
        raise GraphFormatError(f"expected {nchars} data bytes, found {len(body)}", off)
    adj = [0] * n
    k = 0
    value = 0
    for j in range(1, n):
        for i in range(j):
            if k % 6 == 0:
                value = ord(body[k // 6]) - 63
            if value >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    if need % 6:
        pad = ord(body[-1]) - 63
        if pad & ((1 << (6 - need % 6)) - 1):
            raise GraphFormatError("nonzero padding bits", base + pos + nchars - 1)
    return Graph._trusted(n, tuple(adj))


def write_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


_INTS = re.compile(r"^\s*(\d+)\s+(\d+)\s*$")


def read_graphs(text: str) -> Iterator[tuple[int, Graph | GraphFormatError]]:
    """Yield ``(line_number, graph or error)`` for every graph in ``text``.

    A first non-blank line of two integers selects edge-list mode, in which
    several ``n m`` blocks may follow one another; otherwise every non-blank
    line is one graph6 string.  Errors are yielded, not raised, so batch
    commands can report them per line.
    """
    lines = text.splitlines()
    first = next((i for i, ln in enumerate(lines) if ln.strip()), None)
    if first is None:
        return
    if not _INTS.match(lines[first]):
        for i, ln in enumerate(lines, 1):
            if not ln.strip():
                continue
            try:
                yield i, parse_graph6(ln.strip())
            except GraphFormatError as exc:
                exc.line = i
                yield i, GraphFormatError(str(exc), exc.offset, i)
        return
    i = first
    while i < len(lines):
        if not lines[i].strip():
            i += 1
            continue
        start = i + 1
        m = _INTS.match(lines[i])
        if not m:
            yield start, GraphFormatError("expected 'n m' header", line=start)
            return
        n, count = int(m.group(1)), int(m.group(2))
        edges = []
        bad = None
        for k in range(count):
            j = i + 1 + k
            mm = _INTS.match(lines[j]) if j < len(lines) else None
            if not mm:
                bad = GraphFormatError("expected 'u v' edge line", line=j + 1)
                break
            edges.append((int(mm.group(1)), int(mm.group(2))))
        if bad is not None:
            yield start, bad
            return
        try:
            yield start, Graph.from_edges(n, edges)
        except ValueError as exc:
            yield start, GraphFormatError(str(exc), line=start)
        i += 1 + count
