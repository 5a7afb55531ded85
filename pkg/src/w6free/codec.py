"""Interchange formats: graph6 lines, edge-list text, DOT export.

graph6 encoding follows the standard definition: byte n+63, then the
upper triangle of the adjacency matrix in column order, packed into
6-bit groups (zero padded) offset by 63.  Only orders up to 32 are
accepted.  The optional ``>>graph6<<`` header is tolerated on input and
never emitted.
"""

from __future__ import annotations

from .graph import MAX_VERTICES, Graph, build_graph

HEADER = ">>graph6<<"


class MalformedGraph6(ValueError):
    """Input is not a valid graph6 line within the vertex cap."""


def encode_graph6(g: Graph) -> str:
    n = g.n
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(g.adj[i] >> j & 1)
    while len(bits) % 6:
        bits.append(0)
    chars = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = val << 1 | b
        chars.append(chr(val + 63))
    return "".join(chars)


def decode_graph6(line: str) -> Graph:
    s = line.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER) :].strip()
    if not s:
        raise MalformedGraph6("empty line")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise MalformedGraph6(f"invalid byte {ord(ch)}")
    n = ord(s[0]) - 63
    if n == 63:
        raise MalformedGraph6("extended orders beyond 62 are unsupported")
    if n > MAX_VERTICES:
        raise MalformedGraph6(f"order {n} exceeds the {MAX_VERTICES}-vertex cap")
    if n < 1:
        raise MalformedGraph6("order must be at least 1")
    need = (n * (n - 1) // 2 + 5) // 6
    body = s[1:]
    if len(body) != need:
        raise MalformedGraph6(f"expected {need} data bytes, got {len(body)}")
    bits = []
    for ch in body:
        val = ord(ch) - 63
        bits.extend(val >> k & 1 for k in range(5, -1, -1))
    if any(bits[n * (n - 1) // 2 :]):
        raise MalformedGraph6("nonzero padding bits")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(tuple(adj))


def write_graph6_file(path, graphs) -> None:
    with open(path, "w", encoding="ascii") as fh:
        for g in graphs:
            fh.write(encode_graph6(g) + "\n")


def read_graph6_file(path) -> list[Graph]:
    out = []
    with open(path, encoding="ascii") as fh:
        for line in fh:
            if line.strip():
                out.append(decode_graph6(line))
    return out


def encode_edge_list(g: Graph) -> str:
    """Edge-list text: first line "n m", then one "u v" line per edge."""
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def decode_edge_list(text: str) -> Graph:
    rows = [r for r in (line.strip() for line in text.splitlines()) if r]
    if not rows:
        raise ValueError("empty edge-list input")
    n, m = map(int, rows[0].split())
    edges = [tuple(map(int, r.split())) for r in rows[1 : m + 1]]
    if len(edges) != m:
        raise ValueError(f"header promised {m} edges, found {len(edges)}")
    return build_graph(n, edges)


def encode_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in g.vertices():
        lines.append(f"  {v};")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
