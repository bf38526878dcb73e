"""graph6 encoding (McKay's format) for undirected simple graphs."""

from __future__ import annotations

from typing import Iterable, Iterator

from .graph import Graph

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    def __init__(self, message: str, offset: int, line: int | None = None):
        self.offset = offset
        self.line = line
        where = f"byte {offset}" if line is None else f"line {line}, byte {offset}"
        super().__init__(f"{where}: {message}")


def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def encode_graph6(g: Graph) -> str:
    out = [_encode_n(g.n)]
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def decode_graph6(text: str) -> Graph:
    s = text.strip()
    start = 0
    if s.startswith(HEADER):
        start = len(HEADER)
    data = s[start:]
    for i, ch in enumerate(data):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"invalid character {ch!r}", start + i)
    if not data:
        raise Graph6Error("empty graph6 string", start)
    if data[0] != "~":
        n, pos = ord(data[0]) - 63, 1
    elif len(data) >= 2 and data[1] == "~":
        if len(data) < 8:
            raise Graph6Error("truncated vertex count", start + len(data))
        n = 0
        for ch in data[2:8]:
            n = n << 6 | (ord(ch) - 63)
        pos = 8
    else:
        if len(data) < 4:
            raise Graph6Error("truncated vertex count", start + len(data))
        n = 0
        for ch in data[1:4]:
            n = n << 6 | (ord(ch) - 63)
        pos = 4
    need = (n * (n - 1) // 2 + 5) // 6
    body = data[pos:]
    if len(body) != need:
        raise Graph6Error(f"expected {need} data bytes for n={n}, found {len(body)}", start + pos + min(len(body), need))
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(body[k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    if k % 6 and (ord(body[-1]) - 63) & ((1 << (6 - k % 6)) - 1):
        raise Graph6Error("non-zero padding bits", start + pos + len(body) - 1)
    return Graph(tuple(adj))


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    """Decode one graph per non-blank line; errors carry the 1-based line number."""
    for lineno, line in enumerate(lines, 1):
        if not line.strip():
            continue
        try:
            yield decode_graph6(line)
        except Graph6Error as exc:
            raise Graph6Error(str(exc).split(": ", 1)[1], exc.offset, lineno) from None
