from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from planetree.geometry import (
    BOUNDARY,
    COORD_LIMIT,
    GeneralPositionError,
    INTERIOR,
    OUTSIDE,
    Point,
    PointSet,
    in_convex_position,
    in_general_position,
    orient,
    point_in_triangle,
    segments_properly_cross,
)

coords = st.integers(min_value=-(2**20), max_value=2**20)
points = st.builds(Point, coords, coords)


def test_orient_examples():
    assert orient(Point(0, 0), Point(1, 0), Point(0, 1)) == 1
    assert orient(Point(0, 0), Point(1, 1), Point(2, 2)) == 0
    assert orient(Point(0, 0), Point(0, 1), Point(1, 0)) == -1


@given(points, points, points)
def test_orient_antisymmetry_and_cycle(a, b, c):
    assert orient(a, b, c) == -orient(b, a, c) == orient(b, c, a)


@given(points, points, points)
def test_orient_matches_exact_rational_recomputation(a, b, c):
    det = (Fraction(b.x) - a.x) * (Fraction(c.y) - a.y) - (
        Fraction(b.y) - a.y
    ) * (Fraction(c.x) - a.x)
    expected = 0 if det == 0 else (1 if det > 0 else -1)
    assert orient(a, b, c) == expected


def test_cross_examples():
    assert segments_properly_cross(
        Point(0, 0), Point(2, 2), Point(0, 2), Point(2, 0)
    )
    assert not segments_properly_cross(
        Point(0, 0), Point(1, 0), Point(0, 0), Point(0, 1)
    )
    assert not segments_properly_cross(
        Point(0, 0), Point(1, 0), Point(3, 3), Point(4, 4)
    )


@given(points, points, points, points)
def test_cross_symmetries(p, q, r, s):
    base = segments_properly_cross(p, q, r, s)
    assert segments_properly_cross(r, s, p, q) == base
    assert segments_properly_cross(q, p, r, s) == base
    assert segments_properly_cross(p, q, s, r) == base


def test_point_in_triangle_examples():
    a, b, c = Point(0, 0), Point(3, 0), Point(0, 3)
    assert point_in_triangle(Point(1, 1), a, b, c) == INTERIOR
    assert point_in_triangle(Point(0, 0), a, b, c) == BOUNDARY
    assert point_in_triangle(Point(5, 5), a, b, c) == OUTSIDE


def test_point_in_triangle_edge_point_is_boundary():
    assert point_in_triangle(
        Point(1, 0), Point(0, 0), Point(3, 0), Point(0, 3)
    ) == BOUNDARY


def test_point_in_triangle_degenerate_raises():
    with pytest.raises(ValueError):
        point_in_triangle(Point(1, 1), Point(0, 0), Point(1, 0), Point(2, 0))


@given(points, points, points, points)
def test_point_in_triangle_permutation_invariant(p, a, b, c):
    if orient(a, b, c) == 0:
        with pytest.raises(ValueError):
            point_in_triangle(p, a, b, c)
        return
    results = {
        point_in_triangle(p, *perm)
        for perm in [(a, b, c), (b, c, a), (c, a, b), (a, c, b), (c, b, a), (b, a, c)]
    }
    assert len(results) == 1


def test_general_position_examples():
    assert not in_general_position(
        [Point(0, 0), Point(1, 0), Point(2, 0)]
    )
    assert in_general_position([Point(0, 0), Point(1, 0), Point(0, 1)])
    assert not in_general_position([Point(0, 0), Point(0, 0), Point(1, 1)])


def test_pointset_rejects_bad_configurations():
    with pytest.raises(GeneralPositionError):
        PointSet.from_coords([(0, 0), (1, 1), (2, 2)])
    with pytest.raises(ValueError):
        PointSet.from_coords([(COORD_LIMIT + 1, 0), (1, 0), (0, 1)])


def test_convex_position_examples():
    square = PointSet.from_coords([(0, 0), (4, 0), (4, 4), (0, 4)])
    assert in_convex_position(square)
    with_inner = PointSet.from_coords([(0, 0), (4, 0), (4, 4), (0, 4), (1, 2)])
    assert not in_convex_position(with_inner)
    triangle = PointSet.from_coords([(0, 0), (5, 1), (2, 7)])
    assert in_convex_position(triangle)
