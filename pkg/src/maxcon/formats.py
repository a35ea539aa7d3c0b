"""Text interchange: the "n m" edge-list format and graph6."""

from __future__ import annotations

from pathlib import Path

from .errors import ParseError
from .graph import Graph

GRAPH6_HEADER = ">>graph6<<"


def format_edge_list(g: Graph) -> str:
    """Canonical edge list: header ``n m`` then sorted ``u v`` lines with u < v."""
    lines = [f"{g.n} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    rows = [(i + 1, line) for i, line in enumerate(text.splitlines()) if line.strip()]
    if not rows:
        raise ParseError("empty edge list", 1, 1)
    lineno, header = rows[0]
    head = _ints(header, lineno, 2)
    n, m = head
    body = rows[1:]
    if len(body) != m:
        raise ParseError(f"header announces {m} edges but {len(body)} follow", lineno, 1)
    edges = []
    seen = set()
    for lineno, line in body:
        u, v = _ints(line, lineno, 2)
        if not 1 <= u < v <= n:
            raise ParseError(f"edge ({u}, {v}) must satisfy 1 <= u < v <= {n}", lineno, 1)
        if (u, v) in seen:
            raise ParseError(f"duplicate edge ({u}, {v})", lineno, 1)
        seen.add((u, v))
        edges.append((u, v))
    return Graph(n, edges)


def _ints(line: str, lineno: int, count: int) -> list[int]:
    parts = line.split()
    if len(parts) != count:
        raise ParseError(f"expected {count} integers, got {len(parts)}", lineno, 1)
    out = []
    col = 1
    for tok in parts:
        col = line.index(tok, col - 1) + 1
        if not tok.isdigit():
            raise ParseError(f"not a non-negative integer: {tok!r}", lineno, col)
        out.append(int(tok))
        col += len(tok)
    return out


def _encode_n(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n < 1 << 36:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise ValueError(f"graph6 cannot encode n = {n}")


def to_graph6(g: Graph, header: bool = False) -> str:
    """Encode ``g`` as graph6 (vertex ``i`` of the format is label ``i+1``)."""
    n = g.n
    out = bytearray(_encode_n(n))
    acc = nbits = 0
    for j in range(1, n):
        row = g.rows[j + 1]
        for i in range(j):
            acc = acc << 1 | (row >> (i + 1) & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    text = out.decode("ascii")
    return GRAPH6_HEADER + text if header else text


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    data = s.encode("ascii")
    if not data:
        raise ParseError("empty graph6 string", 1, 1)
    for col, b in enumerate(data, 1):
        if not 63 <= b <= 126:
            raise ParseError(f"invalid graph6 byte {b}", 1, col)
    if data[0] != 126:
        n, pos = data[0] - 63, 1
    elif len(data) > 1 and data[1] != 126:
        if len(data) < 4:
            raise ParseError("truncated graph6 size field", 1, 1)
        n = sum((data[1 + i] - 63) << (6 * (2 - i)) for i in range(3))
        pos = 4
    else:
        if len(data) < 8:
            raise ParseError("truncated graph6 size field", 1, 1)
        n = sum((data[2 + i] - 63) << (6 * (5 - i)) for i in range(6))
        pos = 8
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != need:
        raise ParseError(f"graph6 body has {len(body)} bytes, expected {need}", 1, pos + 1)
    rows = [0] * (n + 1)
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                rows[i + 1] |= 1 << (j + 1)
                rows[j + 1] |= 1 << (i + 1)
            k += 1
    return Graph.from_rows(n, rows)


def read_graph(path: str | Path) -> Graph:
    """Read an edge-list or graph6 file (graph6 detected by suffix or header)."""
    p = Path(path)
    text = p.read_text(encoding="ascii")
    if p.suffix == ".g6" or text.lstrip().startswith(GRAPH6_HEADER):
        return from_graph6(text.splitlines()[0])
    return parse_edge_list(text)


def write_graph(g: Graph, path: str | Path) -> None:
    p = Path(path)
    if p.suffix == ".g6":
        p.write_text(to_graph6(g) + "\n", encoding="ascii")
    else:
        p.write_text(format_edge_list(g), encoding="ascii")
