"""Generative operations: edge additions, vertex splits, and T-sums.

Enumerators return (spec, graph) pairs for traceability; deduplication
up to isomorphism is the caller's choice via canonical forms.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from .canon import canonical_form
from .graph import Graph


class NotCubic(ValueError):
    """A T-sum endpoint does not have degree exactly 3."""


@dataclass(frozen=True)
class SplitSpec:
    vertex: int
    part_x: frozenset[int]
    part_y: frozenset[int]


@dataclass(frozen=True)
class TSumSpec:
    """One T-sum instance: matching[i] pairs the i-th neighbor of x (in
    label order) with a neighbor of y; ``contracted`` indexes the
    matching edges that get contracted."""

    x: int
    y: int
    matching: tuple[tuple[int, int], ...]
    contracted: frozenset[int]

    @property
    def i(self) -> int:
        return len(self.contracted)


def enumerate_edge_additions(g: Graph) -> list[tuple[tuple[int, int], Graph]]:
    """One (nonedge, G+e) entry per nonedge."""
    return [((u, v), g.add_edge(u, v)) for u, v in g.nonedges()]


def enumerate_splits(g: Graph) -> list[tuple[SplitSpec, Graph]]:
    """Every split of every vertex of degree >= 4, with both parts >= 2.

    Unordered partitions are enumerated once (the part containing the
    smallest neighbor is X).
    """
    out = []
    for v in g.vertices():
        nbrs = sorted(g.neighbors(v))
        d = len(nbrs)
        if d < 4:
            continue
        anchor, rest = nbrs[0], nbrs[1:]
        for r in range(1, d - 1):
            for extra in combinations(rest, r):
                xs = frozenset((anchor,) + extra)
                ys = frozenset(rest) - xs
                if len(ys) < 2:
                    continue
                spec = SplitSpec(v, xs, ys)
                out.append((spec, g.split_vertex(v, xs, ys)))
    return out


def t_sum(g1: Graph, x: int, g2: Graph, y: int, matching_perm, contracted) -> tuple[TSumSpec, Graph]:
    """One T-sum of g1 at cubic x with g2 at cubic y.

    The two graphs are placed side by side (g2 labels shifted), x and y
    are deleted, a 3-edge matching joins their old neighborhoods, and the
    chosen matching edges are contracted (simplifying as usual).
    """
    nx = sorted(g1.neighbors(x))
    ny = sorted(g2.neighbors(y))
    if len(nx) != 3:
        raise NotCubic(f"vertex {x} has degree {len(nx)}")
    if len(ny) != 3:
        raise NotCubic(f"vertex {y} has degree {len(ny)}")
    from .graph import build_graph

    shift = max(g1.vertices())
    matched = [(nx[i], ny[matching_perm[i]] + shift) for i in range(3)]
    verts = sorted(
        [v for v in g1.vertices() if v != x]
        + [v + shift for v in g2.vertices() if v != y]
    )
    dense = {v: i + 1 for i, v in enumerate(verts)}
    edges = [(dense[u], dense[v]) for u, v in g1.edges() if x not in (u, v)]
    edges += [
        (dense[u + shift], dense[v + shift]) for u, v in g2.edges() if y not in (u, v)
    ]
    edges += [(dense[a], dense[b]) for a, b in matched]
    g = build_graph(len(verts), edges)
    # matching edges are vertex-disjoint, so contraction order is immaterial
    # and labels of the other matched pairs survive each contraction
    for idx in sorted(contracted):
        a, b = matched[idx]
        g = g.contract_edge(dense[a], dense[b])
    spec = TSumSpec(x, y, tuple((a, b - shift) for a, b in matched), frozenset(contracted))
    return spec, g


def enumerate_t_sums(g1: Graph, x: int, g2: Graph, y: int) -> list[tuple[TSumSpec, Graph]]:
    """All 3! matchings x 2^3 contraction subsets, deduplicated by
    canonical form within each contraction count."""
    out = []
    seen: set[tuple[int, bytes]] = set()
    for perm in permutations(range(3)):
        for mask in range(8):
            contracted = frozenset(i for i in range(3) if mask >> i & 1)
            spec, g = t_sum(g1, x, g2, y, perm, contracted)
            key = (len(contracted), canonical_form(g).bytes)
            if key in seen:
                continue
            seen.add(key)
            out.append((spec, g))
    return out
