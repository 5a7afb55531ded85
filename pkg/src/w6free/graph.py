"""Immutable simple graphs on at most 32 labeled vertices.

Adjacency is stored as one int bitset per vertex (bit j of ``adj[i]`` set
iff vertices at positions i and j are adjacent).  Positions are 0-based
internally; the public API speaks 1-based external labels, which survive
edits such as contraction so that named vertices stay addressable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

MAX_VERTICES = 32


class GraphError(ValueError):
    """Base class for graph construction and editing errors."""


class OutOfRange(GraphError):
    """Order or vertex outside the supported range."""


class LoopRejected(GraphError):
    """An edge with equal endpoints was supplied."""


class NotAnEdge(GraphError):
    """The named pair is not an edge of the graph."""


def _bits(mask: int):
    """Iterate over set bit positions of ``mask``, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph as an immutable value.

    Two graphs compare equal iff they have the same order and the same
    adjacency, regardless of labels or construction history.
    """

    adj: tuple[int, ...]
    labels: tuple[int, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if not self.labels:
            object.__setattr__(self, "labels", tuple(range(1, len(self.adj) + 1)))

    @property
    def n(self) -> int:
        return len(self.adj)

    @property
    def m(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[self.index_of(v)].bit_count()

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted((a.bit_count() for a in self.adj), reverse=True))

    def index_of(self, label: int) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise OutOfRange(f"no vertex labeled {label}") from None

    def label_of(self, index: int) -> int:
        return self.labels[index]

    def vertices(self) -> tuple[int, ...]:
        return self.labels

    def has_edge(self, u: int, v: int) -> bool:
        i, j = self.index_of(u), self.index_of(v)
        return bool(self.adj[i] >> j & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        i = self.index_of(v)
        return tuple(self.labels[j] for j in _bits(self.adj[i]))

    def edges(self) -> tuple[tuple[int, int], ...]:
        out = []
        for i in range(self.n):
            for j in _bits(self.adj[i] >> (i + 1) << (i + 1)):
                a, b = self.labels[i], self.labels[j]
                out.append((a, b) if a < b else (b, a))
        return tuple(sorted(out))

    def nonedges(self) -> tuple[tuple[int, int], ...]:
        out = []
        for i, j in combinations(range(self.n), 2):
            if not self.adj[i] >> j & 1:
                a, b = self.labels[i], self.labels[j]
                out.append((a, b) if a < b else (b, a))
        return tuple(sorted(out))

    def add_edge(self, u: int, v: int) -> "Graph":
        if u == v:
            raise LoopRejected(f"loop at {u}")
        i, j = self.index_of(u), self.index_of(v)
        adj = list(self.adj)
        adj[i] |= 1 << j
        adj[j] |= 1 << i
        return Graph(tuple(adj), self.labels)

    def delete_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise NotAnEdge(f"{u}{v} is not an edge")
        i, j = self.index_of(u), self.index_of(v)
        adj = list(self.adj)
        adj[i] &= ~(1 << j)
        adj[j] &= ~(1 << i)
        return Graph(tuple(adj), self.labels)

    def delete_vertex(self, v: int) -> "Graph":
        i = self.index_of(v)
        keep = [k for k in range(self.n) if k != i]
        return self._induced(keep)

    def induced(self, vertex_labels) -> "Graph":
        keep = sorted(self.index_of(v) for v in vertex_labels)
        return self._induced(keep)

    def _induced(self, keep: list[int]) -> "Graph":
        pos = {old: new for new, old in enumerate(keep)}
        adj = [0] * len(keep)
        for new, old in enumerate(keep):
            for j in _bits(self.adj[old]):
                if j in pos:
                    adj[new] |= 1 << pos[j]
        return Graph(tuple(adj), tuple(self.labels[old] for old in keep))

    def contract_edge(self, u: int, v: int) -> "Graph":
        """Contract edge uv, merging into the lower-labeled endpoint.

        Parallel families produced by the merge collapse to single edges;
        the result is simple and has order exactly one less.
        """
        if not self.has_edge(u, v):
            raise NotAnEdge(f"{u}{v} is not an edge")
        if v < u:
            u, v = v, u
        i, j = self.index_of(u), self.index_of(v)
        merged = (self.adj[i] | self.adj[j]) & ~(1 << i) & ~(1 << j)
        keep = [k for k in range(self.n) if k != j]
        pos = {old: new for new, old in enumerate(keep)}
        adj = [0] * len(keep)
        for new, old in enumerate(keep):
            row = merged if old == i else self.adj[old]
            if old != i and row >> j & 1:
                row = (row & ~(1 << j)) | (1 << i)
            row &= ~(1 << j)
            for k in _bits(row):
                adj[new] |= 1 << pos[k]
        return Graph(tuple(adj), tuple(self.labels[old] for old in keep))

    def split_vertex(self, v: int, part_x, part_y) -> "Graph":
        """Split v into adjacent x, y with neighborhoods X and Y.

        (X, Y) must partition N(v) with both parts of size >= 2.  x takes
        v's position and label; y is appended with a fresh label, so
        contracting the new edge xy restores the original graph exactly.
        """
        xs = frozenset(part_x)
        ys = frozenset(part_y)
        nbrs = frozenset(self.neighbors(v))
        if xs & ys or xs | ys != nbrs or len(xs) < 2 or len(ys) < 2:
            raise GraphError(f"({sorted(xs)},{sorted(ys)}) does not split N({v})")
        if self.n + 1 > MAX_VERTICES:
            raise OutOfRange("split would exceed the vertex cap")
        i = self.index_of(v)
        y_label = max(self.labels) + 1
        adj = [row & ~(1 << i) for row in self.adj]
        adj.append(0)
        yi = self.n
        adj[i] = 0
        for u in xs:
            k = self.index_of(u)
            adj[i] |= 1 << k
            adj[k] |= 1 << i
        for u in ys:
            k = self.index_of(u)
            adj[yi] |= 1 << k
            adj[k] |= 1 << yi
        adj[i] |= 1 << yi
        adj[yi] |= 1 << i
        return Graph(tuple(adj), self.labels + (y_label,))

    def add_vertex(self, nbrs) -> "Graph":
        """Append one new vertex adjacent to ``nbrs``; returns its label."""
        if self.n + 1 > MAX_VERTICES:
            raise OutOfRange("vertex cap exceeded")
        idxs = [self.index_of(u) for u in nbrs]
        adj = list(self.adj)
        new = 0
        for k in idxs:
            new |= 1 << k
            adj[k] |= 1 << self.n
        adj.append(new)
        return Graph(tuple(adj), self.labels + (max(self.labels, default=0) + 1,))

    def relabel(self, perm: dict[int, int]) -> "Graph":
        """Permute vertices: position of label v becomes position of perm[v]."""
        order = sorted(self.labels)
        target = {perm[v]: v for v in self.labels}
        new_labels = [target[w] for w in order]
        idx = [self.index_of(v) for v in new_labels]
        inv = {old: new for new, old in enumerate(idx)}
        adj = [0] * self.n
        for new, old in enumerate(idx):
            for j in _bits(self.adj[old]):
                adj[new] |= 1 << inv[j]
        return Graph(tuple(adj), tuple(order))

    def is_connected(self) -> bool:
        if self.n == 0:
            return False
        full = (1 << self.n) - 1
        return components_mask(self.adj, full)[0] == full

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        adj = tuple((full & ~row & ~(1 << i)) for i, row in enumerate(self.adj))
        return Graph(adj, self.labels)


def build_graph(order: int, edges) -> Graph:
    """Build the simple graph on vertices 1..order with the given edges.

    Duplicate pairs collapse; loops and out-of-range endpoints raise.
    """
    if not 1 <= order <= MAX_VERTICES:
        raise OutOfRange(f"order {order} outside 1..{MAX_VERTICES}")
    adj = [0] * order
    for u, v in edges:
        if u == v:
            raise LoopRejected(f"loop at {u}")
        if not (1 <= u <= order and 1 <= v <= order):
            raise OutOfRange(f"edge {u}{v} outside 1..{order}")
        adj[u - 1] |= 1 << (v - 1)
        adj[v - 1] |= 1 << (u - 1)
    return Graph(tuple(adj))


def components_mask(adj, mask: int) -> list[int]:
    """Connected components of the subgraph induced on ``mask``, as bitsets.

    Components are returned lowest-seed first.
    """
    comps = []
    rem = mask
    while rem:
        seed = rem & -rem
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                f ^= low
                nxt |= adj[low.bit_length() - 1]
            frontier = nxt & mask & ~comp
            comp |= frontier
        comps.append(comp)
        rem &= ~comp
    return comps
