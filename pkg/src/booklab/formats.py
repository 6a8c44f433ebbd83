"""graph6 and plain edge-list serialization.

graph6 packs the upper triangle column-major, six bits per printable byte
(offset 63).  The edge-list format is a vertex count line followed by one
"u v" line per edge, 0-based.  Both round-trip bit-exactly.
"""

from __future__ import annotations

from .graphs import Graph, VERTEX_CAP, from_edges


def _triangle_bits(g: Graph) -> list[int]:
    bits = []
    for j in range(1, g.n):
        col = g.adj[j]
        for i in range(j):
            bits.append((col >> i) & 1)
    return bits


def graph6_encode(g: Graph) -> str:
    n = g.n
    if n > 258047:
        raise ValueError("graph6 supports at most 258047 vertices here")
    if n <= 62:
        head = [n + 63]
    else:
        head = [126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63]
    bits = _triangle_bits(g)
    while len(bits) % 6:
        bits.append(0)
    body = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = (val << 1) | b
        body.append(val + 63)
    return bytes(head + body).decode("ascii")


def graph6_decode(text: str) -> Graph:
    raw = text.strip()
    if not raw:
        raise ValueError("empty graph6 string")
    data = raw.encode("ascii", errors="strict")
    for byte in data:
        if not 63 <= byte <= 126:
            raise ValueError(f"byte {byte} outside the graph6 alphabet")
    if data[0] == 126:
        if len(data) < 4:
            raise ValueError("truncated graph6 header")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        body = data[4:]
    else:
        n = data[0] - 63
        body = data[1:]
    if n > VERTEX_CAP:
        raise ValueError(f"vertex count {n} outside [0, {VERTEX_CAP}]")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise ValueError(f"graph6 body length {len(body)} wrong for n={n}")
    bits = []
    for byte in body:
        val = byte - 63
        for shift in range(5, -1, -1):
            bits.append((val >> shift) & 1)
    if any(bits[nbits:]):
        raise ValueError("nonzero padding bits in graph6 body")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


def edge_list_encode(g: Graph) -> str:
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def edge_list_decode(text: str) -> Graph:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ValueError("empty edge-list input")
    try:
        n = int(lines[0])
    except ValueError:
        raise ValueError(f"first line must be the vertex count, got {lines[0]!r}") from None
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"expected 'u v', got {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return from_edges(n, edges)


def parse_graph_text(text: str) -> Graph:
    """Sniff the format: a leading integer line means edge list, else graph6.

    Unambiguous because ASCII digits sit below the graph6 alphabet.
    """
    stripped = text.strip()
    first = stripped.splitlines()[0].strip() if stripped else ""
    if first.isdigit():
        return edge_list_decode(text)
    return graph6_decode(stripped)
