"""graph6 reading/writing and a throwaway DOT writer."""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .graph import Graph, MAX_VERTICES

HEADER = ">>graph6<<"


class Graph6ParseError(ValueError):
    def __init__(self, message: str, offset: int, line: int | None = None) -> None:
        text = f"{message} (byte offset {offset})"
        if line is not None:
            text = f"parse error at line {line}: {text}"
        super().__init__(text)
        self.message = message
        self.offset = offset
        self.line = line


def _size_bytes(n: int) -> str:
    if n <= 62:
        return chr(63 + n)
    return "~" + "".join(chr(63 + ((n >> s) & 63)) for s in (12, 6, 0))


def graph6_encode(g: Graph) -> str:
    """Encode ``g`` as a graph6 string (no trailing newline)."""
    out = [_size_bytes(g.n)]
    acc = 0
    nbits = 0
    adj = g.adj
    for j in range(1, g.n):
        row = adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def graph6_decode(line: str) -> Graph:
    text = line.rstrip("\r\n")
    offset = 0
    if text.startswith(HEADER):
        offset = len(HEADER)
    if offset >= len(text):
        raise Graph6ParseError("empty graph6 string", offset)
    for k, ch in enumerate(text[offset:], start=offset):
        if not 63 <= ord(ch) <= 126:
            raise Graph6ParseError(f"invalid graph6 byte {ch!r}", k)
    if text[offset] == "~":
        if len(text) > offset + 1 and text[offset + 1] == "~":
            raise Graph6ParseError("graphs with more than 258047 vertices unsupported", offset)
        if len(text) < offset + 4:
            raise Graph6ParseError("truncated vertex count", len(text))
        n = 0
        for ch in text[offset + 1 : offset + 4]:
            n = (n << 6) | (ord(ch) - 63)
        body = offset + 4
    else:
        n = ord(text[offset]) - 63
        body = offset + 1
    if not 1 <= n <= MAX_VERTICES:
        raise Graph6ParseError(f"vertex count {n} outside 1..{MAX_VERTICES}", offset)
    npairs = n * (n - 1) // 2
    need = (npairs + 5) // 6
    data = text[body:]
    if len(data) != need:
        raise Graph6ParseError(f"expected {need} data bytes, found {len(data)}", body + min(len(data), need))
    adj = [0] * n
    k = 0
    j, i = 1, 0
    for pos, ch in enumerate(data):
        val = ord(ch) - 63
        for shift in range(5, -1, -1):
            if k == npairs:
                if val & ((1 << (shift + 1)) - 1):
                    raise Graph6ParseError("nonzero padding bits", body + pos)
                break
            if val >> shift & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
            i += 1
            if i == j:
                j += 1
                i = 0
    return Graph(n, tuple(adj))


def read_graph6(stream: TextIO) -> Iterator[tuple[int, Graph]]:
    """Yield ``(line_number, graph)`` for each non-blank line."""
    for lineno, line in enumerate(stream, start=1):
        if not line.strip():
            continue
        try:
            yield lineno, graph6_decode(line.strip())
        except Graph6ParseError as exc:
            raise Graph6ParseError(exc.message, exc.offset, lineno) from exc


def write_graph6(graphs: Iterable[Graph], stream: TextIO) -> None:
    for g in graphs:
        stream.write(graph6_encode(g) + "\n")


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines += [f"  {v};" for v in range(g.n)]
    lines += [f"  {u} -- {v};" for u, v in g.edges()]
    lines.append("}")
    return "\n".join(lines)
