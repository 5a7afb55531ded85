"""Constructors for the named graph families.

Labeling conventions (these matter because edge names like "V8+13" are
used throughout the ledgers):

* wheel(n): rim 1..n in cycle order, hub n+1.
* v8(): cycle 1..8 plus the four diagonals {15, 26, 37, 48}.
* cube(): labeled so that vertices 2, 4, 6 are pairwise nonadjacent and
  form the neighborhood of vertex 7 (parts {1,3,5,7} / {2,4,6,8}, vertex
  i nonadjacent to i+1 across parts).
* c2(n): cycle 1..n plus chords between vertices at cycle distance 2.
* double wheels: rim 1..n, hubs n+1 and n+2.
* complete_bipartite(a, b): parts 1..a and a+1..a+b.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .graph import Graph, build_graph


class BadParameters(ValueError):
    """Family parameters outside their documented ranges."""


def cycle(n: int) -> Graph:
    if n < 3:
        raise BadParameters("cycles need n >= 3")
    return build_graph(n, [(i, i % n + 1) for i in range(1, n + 1)])


def complete(n: int) -> Graph:
    return build_graph(n, list(combinations(range(1, n + 1), 2)))


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise BadParameters("parts must be nonempty")
    return build_graph(a + b, [(i, a + j) for i in range(1, a + 1) for j in range(1, b + 1)])


def wheel(n: int) -> Graph:
    if n < 3:
        raise BadParameters("wheels need rim length >= 3")
    g = cycle(n)
    edges = list(g.edges()) + [(i, n + 1) for i in range(1, n + 1)]
    return build_graph(n + 1, edges)


def v8() -> Graph:
    edges = [(i, i % 8 + 1) for i in range(1, 9)] + [(1, 5), (2, 6), (3, 7), (4, 8)]
    return build_graph(8, edges)


def petersen() -> Graph:
    outer = [(i, i % 5 + 1) for i in range(1, 6)]
    spokes = [(i, i + 5) for i in range(1, 6)]
    inner = [(i + 5, (i + 1) % 5 + 6) for i in range(1, 6)]
    return build_graph(10, outer + spokes + inner)


def cube() -> Graph:
    # K_{4,4} minus the perfect matching {12, 34, 56, 78}
    part_a = [1, 3, 5, 7]
    part_b = [2, 4, 6, 8]
    skip = {1: 2, 3: 4, 5: 6, 7: 8}
    edges = [(a, b) for a in part_a for b in part_b if skip[a] != b]
    return build_graph(8, edges)


def c2(n: int) -> Graph:
    if n < 5:
        raise BadParameters("squared cycles need n >= 5")
    g = cycle(n)
    chords = [(i, (i + 1) % n + 1) for i in range(1, n + 1)]
    return build_graph(n, list(g.edges()) + chords)


def double_wheel(n: int, hub_edge: bool) -> Graph:
    if n < 3:
        raise BadParameters("double wheels need rim length >= 3")
    edges = list(cycle(n).edges())
    edges += [(i, n + 1) for i in range(1, n + 1)]
    edges += [(i, n + 2) for i in range(1, n + 1)]
    if hub_edge:
        edges.append((n + 1, n + 2))
    return build_graph(n + 2, edges)


def alternating_double_wheel(rim: int, hub_edge: bool) -> Graph:
    if rim < 6 or rim % 2:
        raise BadParameters("alternating double wheels need even rim >= 6")
    edges = list(cycle(rim).edges())
    edges += [(i, rim + 1) for i in range(1, rim + 1, 2)]
    edges += [(i, rim + 2) for i in range(2, rim + 1, 2)]
    if hub_edge:
        edges.append((rim + 1, rim + 2))
    return build_graph(rim + 2, edges)


def line_graph(g: Graph) -> Graph:
    pairs = list(g.edges())
    n = len(pairs)
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if set(pairs[i]) & set(pairs[j]):
                edges.append((i + 1, j + 1))
    return build_graph(n, edges)


def k_m3_variant(m: int, x1_edges=(), x2_edges=()) -> Graph:
    """K_{m,3} (part X1 = 1..m, X2 = m+1..m+3) plus explicit added edges.

    x1_edges are pairs within 1..m; x2_edges pairs within {1,2,3} naming
    X2 vertices by offset.
    """
    if m < 3:
        raise BadParameters("K_{m,3} variants need m >= 3")
    base = complete_bipartite(m, 3)
    edges = list(base.edges())
    for u, v in x1_edges:
        if not (1 <= u <= m and 1 <= v <= m):
            raise BadParameters(f"X1 edge {u}{v} outside 1..{m}")
        edges.append((u, v))
    for u, v in x2_edges:
        if not (1 <= u <= 3 and 1 <= v <= 3):
            raise BadParameters(f"X2 edge offset {u}{v} outside 1..3")
        edges.append((m + u, m + v))
    return build_graph(m + 3, edges)


def k44_minus_3k2() -> Graph:
    g = complete_bipartite(4, 4)
    for u, v in [(1, 5), (2, 6), (3, 7)]:
        g = g.delete_edge(u, v)
    return g


def prism() -> Graph:
    return build_graph(6, [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6), (1, 4), (2, 5), (3, 6)])


def add_cubic_vertices(g: Graph, triple, count: int) -> Graph:
    """Add ``count`` pairwise-nonadjacent degree-3 vertices, each with
    neighborhood exactly ``triple``."""
    trio = tuple(sorted(triple))
    if len(set(trio)) != 3:
        raise BadParameters(f"{triple} is not a 3-vertex set")
    out = g
    for _ in range(count):
        out = out.add_vertex(trio)
    return out


def with_edges(g: Graph, edges) -> Graph:
    out = g
    for u, v in edges:
        out = out.add_edge(u, v)
    return out


@dataclass(frozen=True)
class FamilySpec:
    """Parameter record naming one family constructor invocation."""

    family: str
    n: int | None = None
    a: int | None = None
    b: int | None = None
    m: int | None = None
    x1_edges: tuple = field(default=())
    x2_edges: tuple = field(default=())


_SIMPLE = {
    "v8": v8,
    "petersen": petersen,
    "cube": cube,
    "prism": prism,
    "k44-3k2": k44_minus_3k2,
}


def make_family(spec: FamilySpec) -> Graph:
    kind = spec.family
    if kind in _SIMPLE:
        return _SIMPLE[kind]()
    if kind == "wheel":
        return wheel(_need(spec.n, kind))
    if kind == "cycle":
        return cycle(_need(spec.n, kind))
    if kind == "complete":
        return complete(_need(spec.n, kind))
    if kind == "complete_bipartite":
        return complete_bipartite(_need(spec.a, kind), _need(spec.b, kind))
    if kind == "c2":
        return c2(_need(spec.n, kind))
    if kind == "dw":
        return double_wheel(_need(spec.n, kind), hub_edge=False)
    if kind == "dw+":
        return double_wheel(_need(spec.n, kind), hub_edge=True)
    if kind == "aw":
        return alternating_double_wheel(_need(spec.n, kind), hub_edge=False)
    if kind == "aw+":
        return alternating_double_wheel(_need(spec.n, kind), hub_edge=True)
    if kind == "k_m3":
        return k_m3_variant(_need(spec.m, kind), spec.x1_edges, spec.x2_edges)
    raise BadParameters(f"unknown family {kind!r}")


def _need(value, kind):
    if value is None:
        raise BadParameters(f"family {kind!r} is missing a parameter")
    return value
