"""Brute-force oracles, independent of the production algorithms.

These are deliberately naive: permutation search for isomorphism,
delete/contract closure for minors, cut-set enumeration for
connectivity.  Suites and tests use them to cross-check the engines on
small graphs; nothing here shares code with the fast paths.
"""

from __future__ import annotations

from itertools import combinations, permutations

from .graph import Graph, build_graph


def isomorphic_brute(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.m != g2.m:
        return False
    edges1 = g1.edges()
    edge_set2 = {frozenset(e) for e in g2.edges()}
    verts1 = list(g1.vertices())
    for perm in permutations(g2.vertices()):
        mapping = dict(zip(verts1, perm))
        if all(frozenset((mapping[u], mapping[v])) in edge_set2 for u, v in edges1):
            return True
    return False


def automorphism_orbits_brute(g: Graph) -> set[frozenset[int]]:
    verts = list(g.vertices())
    edges = {frozenset(e) for e in g.edges()}
    parent = {v: v for v in verts}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for perm in permutations(verts):
        mapping = dict(zip(verts, perm))
        if {frozenset((mapping[u], mapping[v])) for u, v in edges} == edges:
            for v in verts:
                ra, rb = find(v), find(mapping[v])
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
    groups: dict[int, set[int]] = {}
    for v in verts:
        groups.setdefault(find(v), set()).add(v)
    return {frozenset(s) for s in groups.values()}


def _edge_key(g: Graph) -> tuple:
    return (g.n, tuple(sorted(g.edges())))


def all_minors(g: Graph, min_order: int = 1) -> set[bytes]:
    """Canonical forms of every minor of g with order >= min_order."""
    from .canon import canonical_form

    seen: set[bytes] = set()
    queue = [g]
    visited = {canonical_form(g).bytes}
    while queue:
        cur = queue.pop()
        seen.add(canonical_form(cur).bytes)
        nexts = []
        for u, v in cur.edges():
            nexts.append(cur.delete_edge(u, v))
            if cur.n > min_order:
                nexts.append(cur.contract_edge(u, v))
        if cur.n > min_order:
            for v in cur.vertices():
                nexts.append(cur.delete_vertex(v))
        for nxt in nexts:
            if nxt.n < min_order:
                continue
            b = canonical_form(nxt).bytes
            if b not in visited:
                visited.add(b)
                queue.append(nxt)
    return seen


def has_minor_brute(g: Graph, h: Graph) -> bool:
    from .canon import canonical_form

    if h.n > g.n or h.m > g.m:
        return False
    return canonical_form(h).bytes in all_minors(g, min_order=h.n)


def connectivity_brute(g: Graph) -> int:
    """Smallest vertex cut size by direct enumeration; n-1 if complete."""
    n = g.n
    verts = list(g.vertices())
    for k in range(n - 1):
        for cut in combinations(verts, k):
            rest = [v for v in verts if v not in cut]
            if len(rest) <= 1:
                continue
            sub = g.induced(rest)
            if not sub.is_connected():
                return k
    return n - 1


def all_labeled_graphs(n: int):
    """Yield every graph on n labeled vertices (2^C(n,2) of them)."""
    pairs = list(combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        yield build_graph(n, edges)
