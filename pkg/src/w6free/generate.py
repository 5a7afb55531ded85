"""Isomorph-free exhaustive generation.

Three engines:

* ``closure_generate``: breadth-first closure of seed graphs under
  add-edge / split-vertex, filtered by a registered keep predicate at
  every step.  Both rules add exactly one edge (and a split adds one
  vertex), so order/edge bounds prune soundly.
* ``generate_3connected``: the wheel closure.  Every 3-connected
  non-wheel graph arises from some wheel through 3-connected
  intermediates by single edge additions and vertex splits, so closing
  the wheels under both rules inside the bounds is exhaustive; wheels
  themselves are seeded into the output.
* ``enumerate_all_graphs``: direct sweep of all 2^C(n,2) labeled graphs
  for n <= 7, the oracle substrate.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .canon import CanonicalForm, canonical_form, canonical_graph
from .connectivity import is_internally_four_connected, is_k_connected
from .families import wheel
from .graph import MAX_VERTICES, Graph, build_graph
from .minor import has_minor, is_planar
from .ops import enumerate_edge_additions, enumerate_splits


class BoundsExceeded(RuntimeError):
    """A closure frontier stepped outside the configured caps."""


class OutOfRange(ValueError):
    pass


@dataclass(frozen=True)
class Predicate:
    name: str
    version: int
    fn: object = field(compare=False)

    def __call__(self, g: Graph) -> bool:
        return self.fn(g)


def _w6() -> Graph:
    return wheel(6)


_PREDICATES: dict[str, Predicate] = {}


def register_predicate(name: str, version: int, fn) -> Predicate:
    pred = Predicate(name, version, fn)
    _PREDICATES[name] = pred
    return pred


def get_predicate(name: str) -> Predicate:
    try:
        return _PREDICATES[name]
    except KeyError:
        raise OutOfRange(f"unknown predicate {name!r}; known: {sorted(_PREDICATES)}") from None


register_predicate("true", 1, lambda g: True)
register_predicate("3-connected", 1, lambda g: is_k_connected(g, 3))
register_predicate("w6-minor-free", 1, lambda g: not has_minor(g, _w6()))
register_predicate(
    "3-connected-w6-minor-free",
    1,
    lambda g: is_k_connected(g, 3) and not has_minor(g, _w6()),
)
register_predicate("planar", 1, is_planar)
register_predicate("internally-4-connected", 1, is_internally_four_connected)


@dataclass(frozen=True)
class ClosureTask:
    seeds: tuple[Graph, ...]
    rules: tuple[str, ...] = ("add-edge", "split-vertex")
    max_order: int = 12
    max_edges: int = 24
    keep: str = "true"


def _expand(g: Graph, rules, max_order: int, max_edges: int) -> list[Graph]:
    out = []
    if "add-edge" in rules and g.m + 1 <= max_edges:
        out.extend(h for _, h in enumerate_edge_additions(g))
    if "split-vertex" in rules and g.n + 1 <= max_order and g.m + 1 <= max_edges:
        out.extend(h for _, h in enumerate_splits(g))
    return out


def closure_generate(task: ClosureTask) -> dict[CanonicalForm, Graph]:
    """Closure of the seeds under the rules, keep-filtered at every step.

    Returns canonical form -> representative graph.  The output is
    independent of seed labeling and iteration order.
    """
    if task.max_order > MAX_VERTICES:
        raise BoundsExceeded(f"max order {task.max_order} above the vertex cap")
    for rule in task.rules:
        if rule not in ("add-edge", "split-vertex"):
            raise OutOfRange(f"unknown rule {rule!r}")
    keep = get_predicate(task.keep)
    visited: dict[CanonicalForm, Graph] = {}
    frontier: list[Graph] = []
    for g in task.seeds:
        if g.n > task.max_order or g.m > task.max_edges:
            raise BoundsExceeded(f"seed with {g.n} vertices / {g.m} edges is out of bounds")
        if not keep(g):
            continue
        form = canonical_form(g)
        if form not in visited:
            visited[form] = g
            frontier.append(g)
    while frontier:
        nxt: list[Graph] = []
        for g in sorted(frontier, key=lambda x: (x.n, x.m, canonical_form(x).bytes)):
            for h in _expand(g, task.rules, task.max_order, task.max_edges):
                form = canonical_form(h)
                if form in visited:
                    continue
                if not keep(h):
                    continue
                visited[form] = canonical_graph(form)
                nxt.append(visited[form])
        frontier = nxt
    return visited


def enumerate_all_graphs(n: int, keep=None) -> dict[CanonicalForm, Graph]:
    """All graphs on n labeled vertices (n <= 7), keep-filtered,
    deduplicated canonically."""
    if not 1 <= n <= 7:
        raise OutOfRange("direct enumeration is capped at order 7")
    if isinstance(keep, str):
        keep = get_predicate(keep)
    pairs = list(combinations(range(n), 2))
    out: dict[CanonicalForm, Graph] = {}
    for mask in range(1 << len(pairs)):
        adj = [0] * n
        mm = mask
        while mm:
            low = mm & -mm
            mm ^= low
            i, j = pairs[low.bit_length() - 1]
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        g = Graph(tuple(adj))
        form = canonical_form(g)
        if form in out:
            continue
        if keep is None or keep(g):
            out[form] = canonical_graph(form)
    return out


def generate_3connected(max_n: int = 11, max_m: int = 17) -> dict[CanonicalForm, Graph]:
    """All 3-connected graphs with order <= max_n and size <= max_m."""
    if max_n > 12:
        raise BoundsExceeded("wheel-closure survey capped at order 12")
    seeds = [wheel(k) for k in range(3, max_n) if 2 * k <= max_m and k + 1 <= max_n]
    task = ClosureTask(
        seeds=tuple(seeds),
        rules=("add-edge", "split-vertex"),
        max_order=max_n,
        max_edges=max_m,
        keep="3-connected",
    )
    return closure_generate(task)


def w6_free_edge_superset_classes(g: Graph) -> dict[CanonicalForm, Graph]:
    """All W6-minor-free isomorphism classes of edge-supersets of g on
    the same vertex set (monotone: supersets of a W6-containing graph
    are never W6-free, so only free graphs are expanded)."""
    w6 = _w6()
    if has_minor(g, w6):
        return {}
    visited: dict[CanonicalForm, Graph] = {canonical_form(g): g}
    frontier = [g]
    while frontier:
        nxt = []
        for cur in frontier:
            for _, h in enumerate_edge_additions(cur):
                form = canonical_form(h)
                if form in visited:
                    continue
                if has_minor(h, w6):
                    continue
                visited[form] = h
                nxt.append(h)
        frontier = nxt
    return visited


def maximal_w6_free_extensions(g: Graph) -> dict[CanonicalForm, Graph]:
    """Edge-maximal W6-minor-free edge-supersets of g, up to isomorphism."""
    w6 = _w6()
    out: dict[CanonicalForm, Graph] = {}
    for form, rep in w6_free_edge_superset_classes(g).items():
        if all(has_minor(h, w6) for _, h in enumerate_edge_additions(rep)):
            out[form] = rep
    return out
