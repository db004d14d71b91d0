"""graph6, edge-list and DOT serialization.

Only the plain undirected graph6 dialect is supported: a size prefix
(one byte ``chr(63+n)`` for n <= 62, ``~`` + 3 bytes for n <= 258047,
``~~`` + 6 bytes above that), then the upper-triangle adjacency bits in
column-major order, packed big-endian into 6-bit groups, zero padded,
each group offset by 63.
"""

from __future__ import annotations

from .errors import ParseError
from .graph import Graph

_OFFSET = 63
_TILDE = 126


def encode_graph6(g: Graph) -> str:
    chars = _encode_size(g.n)
    group = 0
    filled = 0
    for j in range(1, g.n):
        col = g.adj[j]
        for i in range(j):
            group = group << 1 | (col >> i & 1)
            filled += 1
            if filled == 6:
                chars.append(group + _OFFSET)
                group = filled = 0
    if filled:
        chars.append((group << (6 - filled)) + _OFFSET)
    return "".join(map(chr, chars))


def _encode_size(n: int) -> list[int]:
    if n <= 62:
        return [n + _OFFSET]
    if n <= 258047:
        return [_TILDE] + _six_bit_groups(n, 3)
    if n <= (1 << 36) - 1:
        return [_TILDE, _TILDE] + _six_bit_groups(n, 6)
    raise ValueError(f"graph6 cannot encode n={n}")


def _six_bit_groups(value: int, count: int) -> list[int]:
    return [((value >> (6 * (count - 1 - i))) & 63) + _OFFSET for i in range(count)]


def decode_graph6(line: str) -> Graph:
    data = line.strip()
    if not data:
        raise ParseError("empty graph6 line")
    codes = [ord(c) for c in data]
    if any(c < _OFFSET or c > _TILDE for c in codes):
        raise ParseError("graph6 characters must be in the range 63..126")
    n, body = _decode_size(codes)
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise ParseError(f"graph6 body for n={n} needs {need} characters, got {len(body)}")
    adj = [0] * n
    pos = 0
    for j in range(1, n):
        for i in range(j):
            bit = body[pos // 6] - _OFFSET >> (5 - pos % 6) & 1
            if bit:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            pos += 1
    return Graph.from_adjacency(adj)


def _decode_size(codes: list[int]) -> tuple[int, list[int]]:
    if codes[0] != _TILDE:
        return codes[0] - _OFFSET, codes[1:]
    if len(codes) >= 2 and codes[1] != _TILDE:
        if len(codes) < 4:
            raise ParseError("truncated graph6 size prefix")
        return _from_groups(codes[1:4]), codes[4:]
    if len(codes) < 8:
        raise ParseError("truncated graph6 size prefix")
    return _from_groups(codes[2:8]), codes[8:]


def _from_groups(codes: list[int]) -> int:
    value = 0
    for c in codes:
        value = value << 6 | (c - _OFFSET)
    return value


def write_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def read_edge_list(text: str) -> Graph:
    """Parse 'n m' then m lines 'u v' (0-based); trailing blank lines allowed."""
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise ParseError("empty edge list")
    header = lines[0].split()
    if len(header) != 2:
        raise ParseError("header must be 'n m'", line=1)
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise ParseError("header must contain two integers", line=1) from None
    if n < 0 or m < 0:
        raise ParseError("n and m must be non-negative", line=1)
    if len(lines) - 1 != m:
        raise ParseError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    for idx, raw in enumerate(lines[1:], start=2):
        fields = raw.split()
        if len(fields) != 2:
            raise ParseError("edge line must be 'u v'", line=idx)
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError("edge endpoints must be integers", line=idx) from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"endpoint out of range for n={n}", line=idx)
        if u == v:
            raise ParseError("self-loops are not allowed", line=idx)
        edges.append((u, v))
    return Graph(n, edges)


def write_dot(g: Graph) -> str:
    """Undirected DOT text with vertices 0..n-1 and edges in stable order."""
    lines = ["graph G {"]
    lines.extend(f"  {v};" for v in range(g.n))
    lines.extend(f"  {u} -- {v};" for u, v in g.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"
