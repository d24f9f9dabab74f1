"""Polygon/degree duality and lattice-point counting."""

import math
from fractions import Fraction

import pytest

from tropicount.polygon_lattice import (
    LatticePolygon,
    degree_relative,
    degree_standard,
    interior_lattice_points,
    pick_data,
    polygon_of_degree,
)


def test_polygon_of_degree_examples():
    assert polygon_of_degree(2, 2, 1).vertices == ((0, 0), (2, 0), (2, 1), (0, 5))
    assert polygon_of_degree(1, 3, 0).vertices == ((0, 0), (3, 0), (0, 3))
    assert polygon_of_degree(0, 2, 3).vertices == ((0, 0), (2, 0), (2, 3), (0, 3))


def test_polygon_of_degree_rejects_degenerate():
    with pytest.raises(ValueError):
        polygon_of_degree(1, 0, 0)
    with pytest.raises(ValueError):
        polygon_of_degree(2, 0, 3)
    with pytest.raises(ValueError):
        polygon_of_degree(1, -1, 2)
    with pytest.raises(ValueError):
        polygon_of_degree(0, 2, 0)


def test_polygon_validation():
    with pytest.raises(ValueError):
        LatticePolygon([(0, 0), (1, 0)])
    with pytest.raises(ValueError):
        LatticePolygon([(0, 0), (1, 1), (2, 2)])
    with pytest.raises(ValueError):  # clockwise
        LatticePolygon([(0, 0), (0, 1), (1, 0)])
    with pytest.raises(ValueError):  # three consecutive collinear
        LatticePolygon([(0, 0), (1, 0), (2, 0), (0, 2)])


def test_degree_standard_examples():
    d = degree_standard(2, 2, 1)
    ends = list(d.ends)
    assert ends.count(((2, 1), 1)) == 2
    assert ends.count(((1, 0), 1)) == 1
    assert ends.count(((0, -1), 1)) == 2
    assert ends.count(((-1, 0), 1)) == 5
    assert d.num_ends == 10

    d11 = degree_standard(1, 1, 1)
    assert sorted(d11.ends) == sorted(
        [((1, 1), 1), ((1, 0), 1), ((0, -1), 1), ((-1, 0), 1), ((-1, 0), 1)]
    )


def test_degree_relative_examples():
    d = degree_relative(1, 1, 2, 2)
    assert sorted(d.ends) == sorted(
        [((1, 1), 1), ((1, 0), 2), ((0, -1), 1), ((-1, 0), 1), ((-1, 0), 1), ((-1, 0), 1)]
    )
    d2 = degree_relative(2, 0, 3, (1, 1))
    assert sorted(d2.ends) == sorted([((1, 0), 1)] * 3 + [((-1, 0), 1)] * 3)
    assert d2.is_degenerate
    with pytest.raises(ValueError, match="tangency exceeds bidegree"):
        degree_relative(1, 1, 1, 2)
    with pytest.raises(ValueError, match="tangency exceeds bidegree"):
        degree_relative(2, 1, 2, (2, 1))


def test_degree_relative_tangency_swap_symmetric():
    for pair in [(1, 1), (2, 1), (3, 2)]:
        a = degree_relative(2, 1, 6, pair)
        b = degree_relative(2, 1, 6, (pair[1], pair[0]))
        assert a.sorted_ends() == b.sorted_ends()


def test_interior_lattice_points_examples():
    assert interior_lattice_points(polygon_of_degree(1, 3, 0)) == 1
    assert interior_lattice_points(polygon_of_degree(2, 1, 1)) == 0
    p = polygon_of_degree(1, 2, 2)
    a, b = 2, 2
    assert interior_lattice_points(p) == 2
    assert interior_lattice_points(p) == (a * a + 2 * a * b - 3 * a - 2 * b + 2) // 2


def test_pick_data_examples():
    square = LatticePolygon([(0, 0), (1, 0), (1, 1), (0, 1)])
    assert pick_data(square) == (Fraction(1), 4, 0)
    tri = LatticePolygon([(0, 0), (2, 0), (0, 2)])
    assert pick_data(tri) == (Fraction(2), 6, 0)
    par = LatticePolygon([(0, 0), (2, 1), (3, 3), (1, 2)])
    area, boundary, interior = pick_data(par)
    assert area == 3
    # quadrilateral variant: area = interior + (non-vertex boundary)/2 + 1
    assert area == interior + Fraction(boundary - 4, 2) + 1


def test_degree_polygon_duality_grid():
    # lattice length of each polygon edge equals the total end weight in the
    # dual direction (rotate the end direction by +90 degrees)
    for n in range(0, 4):
        for a in range(1, 7):
            for b in range(0, 7):
                if b == 0 and n == 0:
                    continue
                poly = polygon_of_degree(n, a, b)
                deg = degree_standard(n, a, b)
                dual = {}
                for (dx, dy), w in deg.ends:
                    dual[(-dy, dx)] = dual.get((-dy, dx), 0) + w
                edge_lengths = {}
                for vx, vy in poly.edge_vectors():
                    g = math.gcd(abs(vx), abs(vy))
                    key = (vx // g, vy // g)
                    edge_lengths[key] = edge_lengths.get(key, 0) + g
                assert dual == edge_lengths


def test_degree_weighted_sum_zero_and_pick_grid():
    for n in range(0, 4):
        for a in range(0, 7):
            for b in range(0, 7):
                if (a, b) == (0, 0):
                    continue
                deg = degree_standard(n, a, b)
                assert (
                    sum(w * d[0] for d, w in deg.ends),
                    sum(w * d[1] for d, w in deg.ends),
                ) == (0, 0)
                if a >= 1 and not (b == 0 and n == 0):
                    # interior_lattice_points asserts the Pick identity itself
                    interior_lattice_points(polygon_of_degree(n, a, b))


def test_serialization():
    p = polygon_of_degree(2, 2, 1)
    assert p.to_json() == {"vertices": [[0, 0], [2, 0], [2, 1], [0, 5]]}
    d = degree_relative(1, 1, 1, None)
    js = d.to_json()
    assert {"dir": [1, 1], "weight": 1} in js["ends"]
    assert len(js["ends"]) == 5


def test_polygon_equality_up_to_rotation():
    p = LatticePolygon([(0, 0), (1, 0), (1, 1), (0, 1)])
    q = LatticePolygon([(1, 1), (0, 1), (0, 0), (1, 0)])
    assert p == q
    assert hash(p) == hash(q)
