"""graph6 and edge-list serialisation."""

from __future__ import annotations

from .graph import Graph


class FormatError(ValueError):
    pass


def _encode_n(n: int) -> bytes:
    if n <= 62:
        return bytes([63 + n])
    if n <= 258047:
        return bytes([126] + [63 + (n >> s & 63) for s in (12, 6, 0)])
    return bytes([126, 126] + [63 + (n >> s & 63) for s in (30, 24, 18, 12, 6, 0)])


def to_graph6(g: Graph) -> str:
    """Encode ``g`` in graph6 (no ``>>graph6<<`` header)."""
    out = bytearray(_encode_n(g.n))
    acc = nacc = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nacc += 1
            if nacc == 6:
                out.append(63 + acc)
                acc = nacc = 0
    if nacc:
        out.append(63 + (acc << (6 - nacc)))
    return out.decode("ascii")


def from_graph6(text: str | bytes) -> Graph:
    if isinstance(text, str):
        text = text.encode("ascii", errors="replace")
    data = text.strip()
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    if not data:
        raise FormatError("empty graph6 string")
    if any(c < 63 or c > 126 for c in data):
        raise FormatError("graph6 byte outside 63..126")
    vals = [c - 63 for c in data]
    if vals[0] < 63:
        n, body = vals[0], vals[1:]
    elif len(vals) >= 2 and vals[1] < 63:
        if len(vals) < 4:
            raise FormatError("truncated graph6 size field")
        n = vals[1] << 12 | vals[2] << 6 | vals[3]
        body = vals[4:]
    else:
        if len(vals) < 8:
            raise FormatError("truncated graph6 size field")
        n = 0
        for v in vals[2:8]:
            n = n << 6 | v
        body = vals[8:]
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise FormatError(f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6}")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


def to_edge_list(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Graph:
    """Parse ``n`` then ``u v`` lines; blank lines and ``#`` comments ignored."""
    entries = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            entries.append((lineno, line.split()))
    if not entries:
        raise FormatError("edge list is empty")
    lineno, head = entries[0]
    if len(head) != 1 or not head[0].isdigit():
        raise FormatError(f"line {lineno}: expected vertex count")
    n = int(head[0])
    edges = []
    for lineno, toks in entries[1:]:
        if len(toks) != 2 or not all(t.isdigit() for t in toks):
            raise FormatError(f"line {lineno}: expected 'u v'")
        u, v = int(toks[0]), int(toks[1])
        if u >= n or v >= n or u == v:
            raise FormatError(f"line {lineno}: bad edge {u} {v}")
        edges.append((u, v))
    return Graph.from_edges(n, edges)
