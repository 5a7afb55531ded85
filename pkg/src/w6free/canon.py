"""Canonical forms, isomorphism, and automorphism orbits.

The canonical form is the lexicographically least (adjacency, colors)
leaf over an individualize-refine search tree: iterated neighborhood
color refinement, branching on the first smallest non-singleton cell.
Automorphisms discovered from equal leaves drive two standard prunes,
orbit pruning among siblings (restricted to automorphisms fixing the
branching path, which is sound) and a backjump to the divergence point
whenever a leaf reproduces the first leaf.

Orbits are computed by the marking method: u and v lie in one orbit iff
the canonical form with u individualized equals the one with v
individualized.  Tests check this against brute-force enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, _bits

_FORMAT_TAG = 1  # bump when the byte layout changes


@dataclass(frozen=True, order=True)
class CanonicalForm:
    order: int
    bytes: bytes


@dataclass(frozen=True)
class VertexOrbits:
    """Partition of the vertex labels into automorphism orbits."""

    orbits: tuple[frozenset[int], ...]

    def orbit_of(self, v: int) -> frozenset[int]:
        for orb in self.orbits:
            if v in orb:
                return orb
        raise KeyError(v)


def _refine(adj: tuple[int, ...], n: int, colors: list[int]) -> list[int]:
    """Equitable refinement: split cells by multiset of neighbor colors."""
    ncells = len(set(colors))
    while True:
        buckets: dict[tuple, list[int]] = {}
        for v in range(n):
            counts: dict[int, int] = {}
            for u in _bits(adj[v]):
                c = colors[u]
                counts[c] = counts.get(c, 0) + 1
            sig = (colors[v], tuple(sorted(counts.items())))
            buckets.setdefault(sig, []).append(v)
        colors = [0] * n
        for rank, sig in enumerate(sorted(buckets)):
            for v in buckets[sig]:
                colors[v] = rank
        if len(buckets) == ncells:
            return colors
        ncells = len(buckets)


def _encode(adj: tuple[int, ...], n: int, perm: list[int]) -> int:
    """Upper-triangle bits of the relabeled graph packed into one int.

    perm[i] is the original vertex placed at position i; bit order is
    (0,1),(0,2),(1,2),(0,3)... so integer comparison is lexicographic.
    """
    out = 0
    for j in range(1, n):
        pj = perm[j]
        for i in range(j):
            out = out << 1 | (adj[perm[i]] >> pj & 1)
    return out


def _first_target_cell(colors: list[int], n: int) -> list[int]:
    cells: dict[int, list[int]] = {}
    for v in range(n):
        cells.setdefault(colors[v], []).append(v)
    best: list[int] = []
    for c in sorted(cells):
        if len(cells[c]) > 1 and (not best or len(cells[c]) < len(best)):
            best = cells[c]
    return best


class _Searcher:
    """One canonical-labeling search over a vertex-colored graph."""

    def __init__(self, adj: tuple[int, ...], n: int, colors: list[int]):
        self.adj = adj
        self.n = n
        self.base = colors
        self.best: tuple[int, tuple[int, ...]] | None = None
        self.best_perm: list[int] | None = None
        self.first: tuple[int, tuple[int, ...]] | None = None
        self.first_perm: list[int] | None = None
        self.first_path: list[int] = []
        self.autos: list[list[int]] = []
        self.backjump: int | None = None

    def run(self) -> tuple[tuple[int, tuple[int, ...]], list[int]]:
        self._search(_refine(self.adj, self.n, self.base), [])
        assert self.best is not None and self.best_perm is not None
        return self.best, self.best_perm

    def _leaf(self, colors: list[int], path: list[int]) -> None:
        perm = [0] * self.n
        for v in range(self.n):
            perm[colors[v]] = v
        value = (_encode(self.adj, self.n, perm), tuple(self.base[v] for v in perm))
        if self.first is None:
            self.first, self.first_perm, self.first_path = value, perm, list(path)
        elif value == self.first:
            gamma = self._record_auto(self.first_perm, perm)
            shared = 0
            while (
                shared < len(path)
                and shared < len(self.first_path)
                and path[shared] == self.first_path[shared]
            ):
                shared += 1
            # Jump back only when gamma certifies that the disputed branch
            # is the image of the first-leaf branch at the divergence node.
            if (
                shared < len(self.first_path)
                and shared < len(path)
                and all(gamma[p] == p for p in path[:shared])
                and gamma[self.first_path[shared]] == path[shared]
            ):
                self.backjump = shared
        if self.best is None or value < self.best:
            self.best, self.best_perm = value, perm
        elif value == self.best and perm != self.best_perm:
            self._record_auto(self.best_perm, perm)

    def _record_auto(self, p1: list[int], p2: list[int]) -> list[int]:
        auto = [0] * self.n
        for pos in range(self.n):
            auto[p1[pos]] = p2[pos]
        if (
            len(self.autos) < 64
            and auto not in self.autos
            and any(auto[v] != v for v in range(self.n))
        ):
            self.autos.append(auto)
        return auto

    def _orbit_closure(self, seed: list[int], path: list[int]) -> set[int]:
        """Closure of `seed` under automorphisms fixing `path` pointwise."""
        usable = [a for a in self.autos if all(a[p] == p for p in path)]
        reach = set(seed)
        if not usable:
            return reach
        inverses = []
        for a in usable:
            inv = [0] * self.n
            for v in range(self.n):
                inv[a[v]] = v
            inverses.append(inv)
        frontier = list(reach)
        while frontier:
            w = frontier.pop()
            for a in usable + inverses:
                img = a[w]
                if img not in reach:
                    reach.add(img)
                    frontier.append(img)
        return reach

    def _search(self, colors: list[int], path: list[int]) -> None:
        cell = _first_target_cell(colors, self.n)
        if not cell:
            self._leaf(colors, path)
            return
        done: list[int] = []
        for v in cell:
            if done and v in self._orbit_closure(done, path):
                continue
            done.append(v)
            split = list(colors)
            for u in range(self.n):
                if split[u] >= colors[v]:
                    split[u] += 1
            split[v] = colors[v]
            self._search(_refine(self.adj, self.n, split), path + [v])
            if self.backjump is not None:
                if len(path) > self.backjump:
                    return
                self.backjump = None


def _canonical_value(g: Graph, marks: dict[int, int] | None = None):
    n = g.n
    colors = [0] * n
    if marks:
        for idx, c in marks.items():
            colors[idx] = c
    if n == 1:
        return (0, tuple(colors)), [0]
    return _Searcher(g.adj, n, colors).run()


def _pack(n: int, enc: int) -> bytes:
    nbits = n * (n - 1) // 2
    return bytes([_FORMAT_TAG, n]) + enc.to_bytes((nbits + 7) // 8, "big")


_canon_cache: dict[tuple[int, tuple[int, ...]], CanonicalForm] = {}
_CACHE_LIMIT = 1 << 20


def canonical_form(g: Graph) -> CanonicalForm:
    key = (g.n, g.adj)
    hit = _canon_cache.get(key)
    if hit is not None:
        return hit
    (enc, _), _ = _canonical_value(g)
    form = CanonicalForm(g.n, _pack(g.n, enc))
    if len(_canon_cache) >= _CACHE_LIMIT:
        _canon_cache.clear()
    _canon_cache[key] = form
    return form


def canonical_graph(form: CanonicalForm) -> Graph:
    """Reconstruct the canonical representative from its byte form."""
    n = form.order
    enc = int.from_bytes(form.bytes[2:], "big")
    nbits = n * (n - 1) // 2
    adj = [0] * n
    pos = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if enc >> pos & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            pos -= 1
    return Graph(tuple(adj))


def canonicalize(g: Graph) -> Graph:
    return canonical_graph(canonical_form(g))


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.m != g2.m:
        return False
    if g1.degree_sequence() != g2.degree_sequence():
        return False
    return canonical_form(g1) == canonical_form(g2)


def automorphism_orbits(g: Graph) -> VertexOrbits:
    """Exact orbit partition via individualized canonical forms."""
    certs: dict[tuple, list[int]] = {}
    for idx in range(g.n):
        (enc, colorvec), _ = _canonical_value(g, {idx: 1})
        certs.setdefault((enc, colorvec), []).append(idx)
    orbits = tuple(
        frozenset(g.labels[i] for i in group)
        for group in sorted(certs.values(), key=lambda grp: grp[0])
    )
    return VertexOrbits(orbits)


def automorphisms(g: Graph) -> list[dict[int, int]]:
    """Every automorphism, as a label mapping (brute force; small n only)."""
    from itertools import permutations

    n = g.n
    out = []
    degs = [a.bit_count() for a in g.adj]
    for perm in permutations(range(n)):
        if any(degs[i] != degs[perm[i]] for i in range(n)):
            continue
        ok = True
        for i in range(n):
            img = 0
            for j in _bits(g.adj[i]):
                img |= 1 << perm[j]
            if img != g.adj[perm[i]]:
                ok = False
                break
        if ok:
            out.append({g.labels[i]: g.labels[perm[i]] for i in range(n)})
    return out
