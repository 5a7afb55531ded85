"""Connectivity predicates: Menger-style vertex connectivity, fast
3-connectivity, and internal 4-connectivity.

``is_internally_four_connected`` uses a derived criterion over vertex
3-cuts (see below); ``i4c_by_separation_enumeration`` is the literal
definition, enumerating every 3-separation including every assignment of
cut-internal edges, and is used as the oracle in tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, _bits, components_mask


@dataclass(frozen=True)
class Separation:
    """A k-separation: two edge-covering sides meeting in ``cut``."""

    side_a: frozenset[int]
    side_b: frozenset[int]
    cut: frozenset[int]

    @property
    def k(self) -> int:
        return len(self.cut)


def _max_vertex_disjoint_paths(g: Graph, s: int, t: int) -> int:
    """Internally disjoint s-t paths for nonadjacent s, t (Menger).

    Unit-capacity max flow on the vertex-split digraph: each vertex v
    becomes v_in -> v_out; edges become arcs both ways.
    """
    n = g.n
    # node 2v = v_in, 2v+1 = v_out; capacity 1 on every arc
    cap: dict[tuple[int, int], int] = {}
    for v in range(n):
        cap[(2 * v, 2 * v + 1)] = 1
    for i in range(n):
        for j in _bits(g.adj[i]):
            cap[(2 * i + 1, 2 * j)] = 1
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while True:
        # BFS for an augmenting path in the residual graph
        prev = {source: source}
        queue = [source]
        while queue and sink not in prev:
            cur = queue.pop(0)
            for (a, b), c in cap.items():
                if a == cur and c > 0 and b not in prev:
                    prev[b] = cur
                    queue.append(b)
        if sink not in prev:
            return flow
        node = sink
        while node != source:
            p = prev[node]
            cap[(p, node)] -= 1
            cap[(node, p)] = cap.get((node, p), 0) + 1
            node = p
        flow += 1


def vertex_connectivity(g: Graph) -> int:
    """kappa(G); n-1 for complete graphs."""
    n = g.n
    if n == 1:
        return 0
    full = (1 << n) - 1
    if all(g.adj[i] == full & ~(1 << i) for i in range(n)):
        return n - 1
    if not g.is_connected():
        return 0
    best = n - 1
    for i in range(n):
        for j in range(i + 1, n):
            if not g.adj[i] >> j & 1:
                best = min(best, _max_vertex_disjoint_paths(g, i, j))
    return best


def is_k_connected(g: Graph, k: int) -> bool:
    if k <= 0:
        return g.n >= 1
    if k == 1:
        return g.is_connected()
    if g.n <= k:
        return False
    if min(a.bit_count() for a in g.adj) < k:
        return False
    if k <= 3:
        # remove every (k-1)-subset; survivor must stay connected
        full = (1 << g.n) - 1
        for rm in combinations(range(g.n), k - 1):
            mask = full
            for v in rm:
                mask &= ~(1 << v)
            if len(components_mask(g.adj, mask)) != 1:
                return False
        return True
    return vertex_connectivity(g) >= k


def _minimal_3cuts(g: Graph):
    """Yield (cut_mask, components) for every 3-subset whose removal
    disconnects g."""
    full = (1 << g.n) - 1
    for trio in combinations(range(g.n), 3):
        cut = (1 << trio[0]) | (1 << trio[1]) | (1 << trio[2])
        comps = components_mask(g.adj, full & ~cut)
        if len(comps) > 1:
            yield cut, comps


def _internal_edge_count(g: Graph, mask: int) -> int:
    total = 0
    for i in _bits(mask):
        total += (g.adj[i] & mask).bit_count()
    return total // 2


def is_internally_four_connected(g: Graph) -> bool:
    """3-connected, order >= 5, and every 3-separation has a claw side.

    Cut analysis: for a 3-cut S with components C1..Cc and k edges inside
    S, a claw side is a singleton component (its vertex then has degree 3
    with neighborhood S) that received no S-internal edges.  Since every
    separation is an adversarial choice of component bipartition and
    internal-edge assignment, the cut passes iff
      k = 0 and (c = 2 with a singleton, or c = 3 with all singletons), or
      k = 1 and c = 2 with both components singletons.
    Cuts with k >= 2 always admit a clawless separation.
    """
    if g.n < 5 or not is_k_connected(g, 3):
        return False
    for cut, comps in _minimal_3cuts(g):
        k = _internal_edge_count(g, cut)
        sizes = sorted(c.bit_count() for c in comps)
        if k >= 2:
            return False
        if k == 1:
            if sizes != [1, 1]:
                return False
        else:
            if not (sizes[0] == 1 and len(sizes) == 2 or sizes == [1, 1, 1]):
                return False
    return True


def _side_is_claw(g: Graph, comp_masks: list[int], cut: int, internal: list[tuple[int, int]]) -> bool:
    """Is the side (components + cut + assigned internal edges) a K_{1,3}?"""
    verts = cut
    for c in comp_masks:
        verts |= c
    if verts.bit_count() != 4:
        return False
    if internal:
        return False
    inside = sum(c.bit_count() for c in comp_masks)
    if inside != 1:
        return False
    v = comp_masks[0]
    i = v.bit_length() - 1
    # v must see all three cut vertices; cut must carry no side edges
    return (g.adj[i] & cut) == cut


def i4c_by_separation_enumeration(g: Graph) -> bool:
    """Literal internal-4-connectivity: every 3-separation, under every
    bipartition of components and every assignment of cut-internal edges,
    has one side isomorphic to K_{1,3}."""
    if g.n < 5 or not is_k_connected(g, 3):
        return False
    for cut, comps in _minimal_3cuts(g):
        internal = []
        for i in _bits(cut):
            for j in _bits(g.adj[i] & cut):
                if i < j:
                    internal.append((i, j))
        c = len(comps)
        for pick in range(1, 2 ** c - 1):
            side_a = [comps[t] for t in range(c) if pick >> t & 1]
            side_b = [comps[t] for t in range(c) if not pick >> t & 1]
            for assign in range(2 ** len(internal)):
                int_a = [e for t, e in enumerate(internal) if assign >> t & 1]
                int_b = [e for t, e in enumerate(internal) if not assign >> t & 1]
                if not (_side_is_claw(g, side_a, cut, int_a) or _side_is_claw(g, side_b, cut, int_b)):
                    return False
    return True


def separations_of_cut(g: Graph, cut_labels) -> list[Separation]:
    """All 3-separations over a given vertex cut, one per component
    bipartition (edge assignments do not change the vertex sides)."""
    cut = 0
    for v in cut_labels:
        cut |= 1 << g.index_of(v)
    full = (1 << g.n) - 1
    comps = components_mask(g.adj, full & ~cut)
    out = []
    c = len(comps)
    for pick in range(1, 2 ** (c - 1)):
        a = cut
        b = cut
        for t in range(c):
            if pick >> t & 1:
                a |= comps[t]
            else:
                b |= comps[t]
        out.append(
            Separation(
                frozenset(g.labels[i] for i in _bits(a)),
                frozenset(g.labels[i] for i in _bits(b)),
                frozenset(cut_labels),
            )
        )
    return out
