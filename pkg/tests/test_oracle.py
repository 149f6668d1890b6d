import random

from planetree.generators import (
    convex_position_points,
    path_complement,
    random_point_set,
)
from planetree.graphs import GeometricGraph, complete_graph
from planetree.oracle import ABSENT, BUDGET_EXCEEDED, FOUND, has_plane_spanning_tree


def test_complete_graph_finds_lex_first_star():
    g = complete_graph(convex_position_points(6))
    result = has_plane_spanning_tree(g)
    assert result.status == FOUND
    assert result.exists is True
    # Lexicographic edge order makes the star at vertex 0 the first tree.
    assert result.witness.tree_edges == frozenset((0, i) for i in range(1, 6))


def test_isolated_vertex_means_absent():
    ps = convex_position_points(5)
    edges = {(i, j) for i in range(4) for j in range(i + 1, 4)}
    g = GeometricGraph(ps, frozenset(edges))
    result = has_plane_spanning_tree(g)
    assert result.status == ABSENT
    assert result.exists is False


def test_path_complement_n6_has_no_tree():
    g = path_complement(6).graph
    assert has_plane_spanning_tree(g).status == ABSENT


def test_budget_exceeded_is_distinct():
    g = complete_graph(convex_position_points(9))
    result = has_plane_spanning_tree(g, budget=3)
    assert result.status == BUDGET_EXCEEDED
    assert result.exists is None
    assert result.nodes > 3


def test_witness_deterministic():
    rng = random.Random(13)
    ps = random_point_set(8, rng)
    g = complete_graph(ps)
    first = has_plane_spanning_tree(g)
    second = has_plane_spanning_tree(g)
    assert first.witness.tree_edges == second.witness.tree_edges
    assert first.nodes == second.nodes


def test_sparse_graphs_random_consistency():
    # Removing edges can only destroy trees: once absent, always absent
    # under further deletion.
    rng = random.Random(21)
    for _ in range(10):
        ps = random_point_set(rng.randint(4, 7), rng)
        edges = sorted(complete_graph(ps).edges)
        rng.shuffle(edges)
        seen_absent = False
        for cut in range(len(edges), -1, -2):
            g = GeometricGraph(ps, frozenset(edges[:cut]))
            status = has_plane_spanning_tree(g).status
            if seen_absent:
                assert status == ABSENT
            elif status == ABSENT:
                seen_absent = True
