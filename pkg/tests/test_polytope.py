"""Triangular patterns, interlacing membership, lattice enumeration, and
facet slack arithmetic."""

from fractions import Fraction

import pytest

from gzpoly.polytope import (
    Facet,
    GZShape,
    all_facets,
    contains,
    coord,
    facet_distance,
    facet_value,
    format_point,
    format_weight,
    lattice_points,
    parse_point,
    parse_weight,
    point_shape_ok,
    projection_root_coords,
    row_lengths,
)


def test_shape_validation():
    s = GZShape((0, 1, 3))
    assert s.n == 3
    assert s.d == 3
    with pytest.raises(ValueError):
        GZShape((0, 1, 1))
    with pytest.raises(ValueError):
        GZShape((3, 1, 0))
    with pytest.raises(ValueError):
        GZShape((0,))
    with pytest.raises(ValueError):
        GZShape((0, Fraction(1, 2), 1))


def test_rows_and_coord():
    assert row_lengths(4) == [3, 2, 1]
    assert point_shape_ok(3, ((1, 3), (2,)))
    assert not point_shape_ok(3, ((1, 3, 4), (2,)))
    lam = (0, 1, 3)
    rows = ((1, 3), (2,))
    # row index 0 reads the weight itself
    assert coord(lam, rows, 0, 2) == 1
    assert coord(lam, rows, 1, 2) == 3
    assert coord(lam, rows, 2, 1) == 2


def test_contains_interlacing():
    s = GZShape((0, 1, 3))
    assert contains(s, ((0, 1), (0,)))
    assert contains(s, ((1, 3), (3,)))
    assert contains(s, ((Fraction(1, 2), 2), (1,)))
    assert not contains(s, ((2, 3), (1,)))
    assert not contains(s, ((0, 1), (2,)))


@pytest.mark.parametrize(
    "lam,count",
    [
        ((0, 1), 2),
        ((0, 2), 3),
        ((0, 3), 4),
        ((0, 5), 6),
        ((0, 1, 2), 8),
        ((0, 1, 3), 15),
        ((0, 2, 5), 42),
        ((0, 2, 7), 81),
        ((0, 1, 2, 3), 64),
        ((0, 1, 3, 7), 1000),
        ((0, 2, 3, 7), 875),
        ((0, 2, 5, 11), 7546),
    ],
)
def test_lattice_point_counts(lam, count):
    assert len(lattice_points(GZShape(lam))) == count


def test_lattice_points_are_sorted_integral_members():
    s = GZShape((0, 1, 3))
    pts = lattice_points(s)
    assert pts == sorted(pts)
    assert len(set(pts)) == len(pts)
    for rows in pts:
        assert contains(s, rows)
        assert all(isinstance(x, int) for row in rows for x in row)


def test_projection_row_sums():
    # row sums, top row included, differenced into simple-root coordinates
    rows = ((1, 3), (3,))
    assert projection_root_coords(rows) == (4, 3)
    assert projection_root_coords(((0, 1), (0,))) == (1, 0)


def test_facets_count_and_slack():
    n = 3
    fs = all_facets(n)
    assert len(fs) == 6
    assert Facet("L", 1, 1) in fs and Facet("R", 2, 1) in fs
    s = GZShape((0, 1, 3))
    rows = ((1, 3), (3,))
    # L slack is x - upper-left, R slack is upper-right - x
    assert facet_value(s, Facet("L", 1, 1), rows) == 1
    assert facet_value(s, Facet("R", 1, 1), rows) == 0
    assert facet_value(s, Facet("L", 2, 1), rows) == 2
    assert facet_value(s, Facet("R", 2, 1), rows) == 0


def test_facet_distance():
    s = GZShape((0, 1, 3))
    rows = ((1, 3), (3,))
    assert facet_distance(s, Facet("L", 1, 1), rows) == 1
    assert facet_distance(s, Facet("R", 1, 1), rows) == 0
    with pytest.raises(ValueError):
        facet_distance(s, Facet("L", 1, 1), ((Fraction(1, 2), 3), (3,)))


def test_weight_and_point_serialization():
    assert parse_weight("0,1,3") == (0, 1, 3)
    assert format_weight((0, 1, 3)) == "0,1,3"
    assert parse_point("1,3;3") == ((1, 3), (3,))
    assert format_point(((1, 3), (3,))) == "1,3;3"
    rt = ((0, 2, 5), (1, 4), (2,))
    assert parse_point(format_point(rt)) == rt
    # plain deserializer: permuted weights such as sigma(lam) round-trip too
    assert parse_weight("3,0,1") == (3, 0, 1)
    with pytest.raises(ValueError):
        parse_weight("a,b")
