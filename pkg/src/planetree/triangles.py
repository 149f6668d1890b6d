"""Empty triangles of a point set and the disconnected-triangle count.

A triple is an empty triangle when no other point of the set lies
strictly inside it.  Relative to a graph, an empty triangle is
"disconnected" when its three vertices induce at most one edge.
Emptiness inside an induced subgraph is always judged against the
subgraph's own points, not the parent's.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable

from .geometry import INTERIOR, PointSet, point_in_triangle
from .graphs import GeometricGraph, canonical_edge

Triple = tuple[int, int, int]


def enumerate_empty_triangles(ps: PointSet) -> list[Triple]:
    """All empty triangles of ps, sorted lexicographically.

    Reference O(n^4) scan: every triple against every other point.
    """
    if len(ps) < 3:
        raise ValueError("need at least 3 points")
    return list(_empty_triples(ps))


@lru_cache(maxsize=4096)
def _empty_triples(ps: PointSet) -> tuple[Triple, ...]:
    n = len(ps)
    out: list[Triple] = []
    for i, j, k in combinations(range(n), 3):
        a, b, c = ps[i], ps[j], ps[k]
        if all(
            point_in_triangle(ps[t], a, b, c) != INTERIOR
            for t in range(n)
            if t not in (i, j, k)
        ):
            out.append((i, j, k))
    return tuple(out)


@dataclass(frozen=True)
class DisconnectedTriangles:
    """Count of disconnected empty triangles, with the witnesses themselves."""

    count: int
    witnesses: tuple[Triple, ...]


def disconnected_empty_triangles(g: GeometricGraph) -> DisconnectedTriangles:
    """Empty triangles of g's point set whose vertices induce <= 1 edge of g."""
    witnesses = []
    for u, v, w in _empty_triples(g.ps):
        induced = (
            (canonical_edge(u, v) in g.edges)
            + (canonical_edge(v, w) in g.edges)
            + (canonical_edge(u, w) in g.edges)
        )
        if induced <= 1:
            witnesses.append((u, v, w))
    return DisconnectedTriangles(len(witnesses), tuple(witnesses))


def relative_equals_global_empty(parent: PointSet, subset: Iterable[int]) -> bool:
    """Diagnostic: subset-relative emptiness implies parent emptiness.

    Meaningful when subset is the intersection of parent with a closed
    half-plane (then it is a theorem); arbitrary subsets may return
    False.  Used by property tests only.
    """
    order = sorted(set(subset))
    sub = PointSet(tuple(parent[i] for i in order))
    outside = [parent[i] for i in range(len(parent)) if i not in set(order)]
    for li, lj, lk in _empty_triples(sub):
        a, b, c = sub[li], sub[lj], sub[lk]
        for p in outside:
            if point_in_triangle(p, a, b, c) == INTERIOR:
                return False
    return True
