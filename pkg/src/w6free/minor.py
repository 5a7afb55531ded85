"""Minor containment with verifiable branch-set certificates.

``find_minor_model`` runs a branch-and-bound over partial branch-set
assignments: pattern vertices are processed in descending-degree order;
for each, every connected candidate set of available host vertices is
tried, subject to adjacency with already-placed neighbor sets, a
boundary-degree bound, room for the unplaced pattern vertices, and
symmetry-breaking constraints derived from the pattern's automorphism
stabilizer chain.  ``verify_minor_model`` checks certificates with an
independent code path.

``is_planar`` applies the excluded-minor criterion: planar iff neither a
K5 nor a K_{3,3} minor exists (with the edge-count prefilter).
"""

from __future__ import annotations

from collections import OrderedDict
from dataclasses import dataclass

from .graph import Graph, _bits, components_mask

DEFAULT_BUDGET = 10_000_000


class SearchBudgetExceeded(RuntimeError):
    """The branch node limit was hit before the search concluded."""


@dataclass(frozen=True)
class MinorModel:
    """Certificate of H <= G: branch sets keyed by pattern vertex label."""

    branch_sets: tuple[tuple[int, frozenset[int]], ...]

    def as_dict(self) -> dict[int, frozenset[int]]:
        return dict(self.branch_sets)

    def to_json_obj(self) -> dict:
        return {str(v): sorted(s) for v, s in self.branch_sets}


def _pattern_order(h: Graph) -> list[int]:
    idxs = list(range(h.n))
    idxs.sort(key=lambda i: (-h.adj[i].bit_count(), i))
    return idxs


def _stabilizer_constraints(h: Graph, order: list[int]) -> list[list[int]]:
    """constraints[j] = earlier positions k whose branch set must keep a
    smaller minimum host vertex than position j's.

    Position j gets the constraint from k when the pattern vertex at j
    lies in the orbit of the vertex at k under the automorphisms fixing
    positions 0..k-1 pointwise.  Any model can be permuted to satisfy
    these, so enforcing them loses no models.
    """
    from .canon import automorphisms

    if h.n > 8:
        return [[] for _ in order]
    autos = automorphisms(h)
    if len(autos) == 1:
        return [[] for _ in order]
    lab = [h.labels[i] for i in order]
    constraints: list[list[int]] = [[] for _ in order]
    stab = autos
    for k in range(len(order)):
        vk = lab[k]
        orbit = {a[vk] for a in stab}
        for j in range(k + 1, len(order)):
            if lab[j] in orbit:
                constraints[j].append(k)
        stab = [a for a in stab if a[vk] == vk]
        if len(stab) == 1:
            break
    return constraints


def _connected_supersets(adj, start: int, allowed: int, max_size: int):
    """All connected vertex sets containing `start` within `allowed`,
    each yielded exactly once, as bitmasks."""
    out: list[int] = []

    def grow(cur: int, border: int, banned: int) -> None:
        out.append(cur)
        if cur.bit_count() >= max_size:
            return
        ext = border & allowed & ~cur & ~banned
        veto = banned
        while ext:
            low = ext & -ext
            ext ^= low
            grow(cur | low, border | adj[low.bit_length() - 1], veto)
            veto |= low
    grow(1 << start, adj[start], 0)
    return out


class _MinorSearch:
    def __init__(self, g: Graph, h: Graph, budget: int):
        self.g = g
        self.h = h
        self.budget = budget
        self.nodes = 0
        self.order = _pattern_order(h)
        self.constraints = _stabilizer_constraints(h, self.order)
        self.pat_deg = [h.adj[i].bit_count() for i in self.order]
        self.pos_of = {pi: pos for pos, pi in enumerate(self.order)}
        # earlier positions adjacent to each position, and # later neighbors
        self.earlier: list[list[int]] = []
        self.later_count: list[int] = []
        for pos, pi in enumerate(self.order):
            nbr_pos = [self.pos_of[j] for j in _bits(h.adj[pi])]
            self.earlier.append(sorted(k for k in nbr_pos if k < pos))
            self.later_count.append(sum(1 for k in nbr_pos if k > pos))

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise SearchBudgetExceeded(f"minor search exceeded {self.budget} nodes")

    def run(self) -> list[int] | None:
        g, h = self.g, self.h
        if h.n > g.n or h.m > g.m:
            return None
        return self._place(0, [], (1 << g.n) - 1, [])

    def _place(self, pos: int, sets: list[int], avail: int, mins: list[int]):
        g, h = self.g, self.h
        if pos == h.n:
            return list(sets)
        self._tick()
        remaining_after = h.n - pos - 1
        max_size = avail.bit_count() - remaining_after
        if max_size < 1:
            return None
        # candidate neighborhoods of already-placed pattern neighbors
        need_touch = []
        for k in self.earlier[pos]:
            nb = 0
            for i in _bits(sets[k]):
                nb |= g.adj[i]
            nb &= ~sets[k] & avail
            if not nb:
                return None
            need_touch.append(nb)
        seeds = need_touch[0] if need_touch else avail
        floor = -1
        for k in self.constraints[pos]:
            floor = max(floor, mins[k])
        tried: set[int] = set()
        s = seeds
        while s:
            low = s & -s
            s ^= low
            start = low.bit_length() - 1
            for cand in _connected_supersets(g.adj, start, avail, max_size):
                if cand in tried:
                    continue
                tried.add(cand)
                self._tick()
                low_v = (cand & -cand).bit_length() - 1
                if low_v <= floor:
                    continue
                ok = True
                for nb in need_touch:
                    if not cand & nb:
                        ok = False
                        break
                if not ok:
                    continue
                boundary = 0
                for i in _bits(cand):
                    boundary |= g.adj[i]
                boundary &= ~cand
                if boundary.bit_count() < self.pat_deg[pos]:
                    continue
                new_avail = avail & ~cand
                if self.later_count[pos] and not boundary & new_avail:
                    continue
                if not self._future_feasible(pos, sets + [cand], new_avail):
                    continue
                result = self._place(pos + 1, sets + [cand], new_avail, mins + [low_v])
                if result is not None:
                    return result
        return None

    def _future_feasible(self, pos: int, sets: list[int], avail: int) -> bool:
        """Every unplaced pattern vertex needs one component of G[avail]
        touching the boundaries of all its placed neighbors."""
        g, h = self.g, self.h
        if avail.bit_count() < h.n - pos - 1:
            return False
        comps = None
        for later in range(pos + 1, h.n):
            anchors = []
            pi = self.order[later]
            for j in _bits(h.adj[pi]):
                k = self.pos_of[j]
                if k <= pos:
                    nb = 0
                    for i in _bits(sets[k]):
                        nb |= g.adj[i]
                    anchors.append(nb & avail)
            if not anchors:
                continue
            if comps is None:
                comps = components_mask(g.adj, avail) if avail else []
            if not any(all(c & a for a in anchors) for c in comps):
                return False
        return True


def find_minor_model(g: Graph, h: Graph, budget: int = DEFAULT_BUDGET) -> MinorModel | None:
    """A branch-set certificate of H <= G, or None if no model exists."""
    search = _MinorSearch(g, h, budget)
    sets = search.run()
    if sets is None:
        return None
    pairs = []
    for pos, mask in enumerate(sets):
        pv = h.labels[search.order[pos]]
        pairs.append((pv, frozenset(g.labels[i] for i in _bits(mask))))
    pairs.sort()
    return MinorModel(tuple(pairs))


def verify_minor_model(g: Graph, h: Graph, model: MinorModel) -> bool:
    """Independent certificate check: disjoint, connected branch sets
    covering the pattern's vertices, with every pattern edge realized."""
    sets = model.as_dict()
    if set(sets) != set(h.vertices()):
        return False
    g_verts = set(g.vertices())
    g_edges = {frozenset(e) for e in g.edges()}
    used: set[int] = set()
    for verts in sets.values():
        if not verts or not verts <= g_verts or used & verts:
            return False
        used |= verts
        # connectivity by plain DFS over the edge list
        verts = set(verts)
        stack = [next(iter(verts))]
        seen = {stack[0]}
        while stack:
            cur = stack.pop()
            for other in verts - seen:
                if frozenset((cur, other)) in g_edges:
                    seen.add(other)
                    stack.append(other)
        if seen != verts:
            return False
    for u, v in h.edges():
        if not any(
            frozenset((a, b)) in g_edges for a in sets[u] for b in sets[v]
        ):
            return False
    return True


_memo: OrderedDict[tuple, bool] = OrderedDict()
_MEMO_LIMIT = 1 << 18


def has_minor(g: Graph, h: Graph, budget: int = DEFAULT_BUDGET) -> bool:
    """Whether H <= G.  Memoized on canonical forms within a run."""
    if h.n > g.n or h.m > g.m:
        return False
    from .canon import canonical_form

    key = (canonical_form(g).bytes, canonical_form(h).bytes)
    hit = _memo.get(key)
    if hit is not None:
        _memo.move_to_end(key)
        return hit
    result = find_minor_model(g, h, budget) is not None
    if len(_memo) >= _MEMO_LIMIT:
        _memo.popitem(last=False)
    _memo[key] = result
    return result


def clear_minor_memo() -> None:
    _memo.clear()


def is_planar(g: Graph) -> bool:
    """Planarity by excluded minors: no K5 and no K_{3,3} minor."""
    from .families import complete, complete_bipartite

    if g.n <= 4:
        return True
    if g.n >= 3 and g.m > 3 * g.n - 6:
        return False
    return not has_minor(g, complete(5)) and not has_minor(g, complete_bipartite(3, 3))
