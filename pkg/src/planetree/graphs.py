"""Geometric graphs: straight-line edges over a PointSet.

Edges are canonical (min, max) index pairs.  Induced subgraphs remember
how their local indices map back to the parent so recursively built
trees can be lifted into the original graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .geometry import PointSet, segments_properly_cross

Edge = tuple[int, int]


def canonical_edge(i: int, j: int) -> Edge:
    if i == j:
        raise ValueError(f"self-loop at index {i}")
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class GeometricGraph:
    ps: PointSet
    edges: frozenset[Edge]
    parent: "GeometricGraph | None" = field(default=None, repr=False, compare=False)
    parent_map: tuple[int, ...] | None = field(default=None, repr=False, compare=False)

    def __post_init__(self) -> None:
        n = len(self.ps)
        canon = frozenset(canonical_edge(i, j) for i, j in self.edges)
        for i, j in canon:
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"edge ({i}, {j}) out of range for {n} points")
        object.__setattr__(self, "edges", canon)

    @property
    def n(self) -> int:
        return len(self.ps)

    def has_edge(self, i: int, j: int) -> bool:
        return canonical_edge(i, j) in self.edges

    def to_parent(self, edges: Iterable[Edge]) -> set[Edge]:
        """Map local edges to the parent graph's index space."""
        if self.parent_map is None:
            raise ValueError("graph has no parent mapping")
        m = self.parent_map
        return {canonical_edge(m[i], m[j]) for i, j in edges}


def complete_graph(ps: PointSet) -> GeometricGraph:
    n = len(ps)
    return GeometricGraph(ps, frozenset(combinations(range(n), 2)))


def induced_subgraph(g: GeometricGraph, subset: Iterable[int]) -> GeometricGraph:
    """Subgraph on `subset` with exactly the edges of g inside it.

    Local index k corresponds to parent index parent_map[k]; the subset
    is sorted, so the mapping is deterministic.
    """
    order = sorted(set(subset))
    if not order:
        raise ValueError("subset must contain at least one index")
    for i in order:
        if not (0 <= i < g.n):
            raise ValueError(f"index {i} out of range for {g.n} points")
    local = {parent_idx: k for k, parent_idx in enumerate(order)}
    sub_ps = PointSet(tuple(g.ps[i] for i in order))
    sub_edges = frozenset(
        (local[i], local[j]) for i, j in g.edges if i in local and j in local
    )
    return GeometricGraph(sub_ps, sub_edges, parent=g, parent_map=tuple(order))


def triple_connected(g: GeometricGraph, u: int, v: int, w: int) -> bool:
    """True iff the subgraph induced by {u, v, w} is connected.

    A 3-vertex graph is connected exactly when at least two of the three
    possible edges are present.
    """
    if len({u, v, w}) != 3:
        raise ValueError("indices must be pairwise distinct")
    count = (
        (canonical_edge(u, v) in g.edges)
        + (canonical_edge(v, w) in g.edges)
        + (canonical_edge(u, w) in g.edges)
    )
    return count >= 2


def is_crossing_free(g: GeometricGraph, edge_subset: Iterable[Edge]) -> bool:
    """True iff no two edges of the subset properly cross (all-pairs scan)."""
    return find_crossing_pair(g.ps, edge_subset) is None


def find_crossing_pair(
    ps: PointSet, edges: Iterable[Edge]
) -> tuple[Edge, Edge] | None:
    items = sorted(set(edges))
    for (a, b), (c, d) in combinations(items, 2):
        if segments_properly_cross(ps[a], ps[b], ps[c], ps[d]):
            return (a, b), (c, d)
    return None


@dataclass(frozen=True)
class PlaneTree:
    """A certified plane spanning tree; construct via certify_plane_spanning_tree."""

    graph: GeometricGraph
    tree_edges: frozenset[Edge]


@dataclass(frozen=True)
class Rejection:
    """Structured verdict for a failed certification."""

    reason: str  # "not-subgraph" | "wrong-count" | "disconnected" | "crossing"
    witness: tuple[Edge, Edge] | None = None

    def __str__(self) -> str:
        if self.witness is None:
            return self.reason
        return f"{self.reason} {list(self.witness[0])}x{list(self.witness[1])}"


def certify_plane_spanning_tree(
    g: GeometricGraph, tree_edges: Iterable[Edge]
) -> PlaneTree | Rejection:
    """Check that tree_edges is a plane spanning tree of g.

    Four independent conditions, reported in this order: subgraph,
    edge count n-1, connectivity over all vertices, crossing-freedom
    (with a witness pair on failure).  Returns a verdict, never raises.
    """
    t = frozenset(canonical_edge(i, j) for i, j in tree_edges)
    if not t <= g.edges:
        return Rejection("not-subgraph")
    if len(t) != g.n - 1:
        return Rejection("wrong-count")
    if not _spans(g.n, t):
        return Rejection("disconnected")
    pair = find_crossing_pair(g.ps, t)
    if pair is not None:
        return Rejection("crossing", witness=pair)
    return PlaneTree(g, t)


def _spans(n: int, edges: frozenset[Edge]) -> bool:
    if n == 0:
        return False
    adj: dict[int, list[int]] = {i: [] for i in range(n)}
    for i, j in edges:
        adj[i].append(j)
        adj[j].append(i)
    seen = {0}
    stack = [0]
    while stack:
        cur = stack.pop()
        for nxt in adj[cur]:
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return len(seen) == n
