import random
from fractions import Fraction as F
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from kislands.exact_geom import (BOUNDARY, INTERIOR, OUTSIDE, DegenerateError, DimensionError,
                                 orientation, point_in_hull, simplex_volume,
                                 squared_distance_to_affine_hull, squared_distance_to_convex_hull)

coord = st.fractions(min_value=-5, max_value=5, max_denominator=7)


def pts(d, m):
    return st.lists(st.tuples(*[coord] * d), min_size=m, max_size=m)


def test_orientation_examples():
    assert orientation([(0, 0), (1, 0), (0, 1)]) == 1
    assert orientation([(0, 0), (1, 1), (2, 2)]) == 0
    assert orientation([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)]) == 1
    assert orientation([(0, 0), (0, 1), (1, 0)]) == -1


def test_orientation_dimension_mismatch():
    with pytest.raises(DimensionError):
        orientation([(0, 0), (1, 0, 0), (0, 1)])
    with pytest.raises(DimensionError):
        orientation([(0, 0), (1, 0)])


def test_simplex_volume_examples():
    assert simplex_volume([(0, 0), (1, 0), (0, 1)]) == F(1, 2)
    assert simplex_volume([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)]) == F(1, 6)
    assert simplex_volume([(0, 0), (1, 1), (2, 2)]) == 0


def test_affine_distance_examples():
    assert squared_distance_to_affine_hull((0, 1), [(0, 0), (1, 0)]) == 1
    assert squared_distance_to_affine_hull((5, 0), [(0, 0), (1, 0)]) == 0
    assert squared_distance_to_affine_hull((1, 1, 1), [(0, 0, 0)]) == 3
    with pytest.raises(DegenerateError):
        squared_distance_to_affine_hull((0, 1), [(0, 0), (1, 1), (2, 2)])


def test_hull_distance_examples():
    assert squared_distance_to_convex_hull((2, 0), [(0, 0), (1, 0)]) == 1
    assert squared_distance_to_convex_hull((F(1, 2), 0), [(0, 0), (1, 0)]) == 0
    assert squared_distance_to_convex_hull((2, 2), [(0, 0), (1, 0)]) == 5


def test_point_in_hull_examples():
    tri = [(0, 0), (1, 0), (0, 1)]
    assert point_in_hull((F(1, 4), F(1, 4)), tri) == INTERIOR
    assert point_in_hull((0, 0), tri) == BOUNDARY
    assert point_in_hull((F(1, 2), F(1, 2)), tri) == BOUNDARY
    assert point_in_hull((2, 2), tri) == OUTSIDE
    square = [(0, 0), (2, 0), (0, 2), (2, 2)]
    assert point_in_hull((1, 1), square) == INTERIOR
    assert point_in_hull((1, 0), square) == BOUNDARY


def test_point_in_hull_lower_dimensional():
    seg = [(0, 0), (2, 2)]
    assert point_in_hull((1, 1), seg) == BOUNDARY
    assert point_in_hull((1, 0), seg) == OUTSIDE


@settings(max_examples=60, deadline=None)
@given(pts(2, 3), st.permutations(range(3)))
def test_transposition_flips_sign(s, perm):
    parity = sum(1 for i, j in combinations(range(3), 2) if perm[i] > perm[j]) % 2
    sign = -1 if parity else 1
    assert orientation([s[i] for i in perm]) == sign * orientation(s)


@settings(max_examples=60, deadline=None)
@given(pts(3, 4))
def test_volume_zero_iff_orientation_zero(s):
    assert (simplex_volume(s) == 0) == (orientation(s) == 0)


@settings(max_examples=60, deadline=None)
@given(st.tuples(coord, coord), pts(2, 5))
def test_distance_zero_iff_in_hull(q, P):
    assert (squared_distance_to_convex_hull(q, P) == 0) == (point_in_hull(q, P) != OUTSIDE)


def test_distance_matches_affine_when_projection_inside():
    rng = random.Random(4)
    checked = 0
    for _ in range(200):
        P = [tuple(F(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(3)) for _ in range(3)]
        q = tuple(F(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(3))
        try:
            aff = squared_distance_to_affine_hull(q, P)
        except DegenerateError:
            continue
        hull = squared_distance_to_convex_hull(q, P)
        assert hull >= aff
        # projection lies in the triangle exactly when the distances agree
        if hull == aff:
            checked += 1
    assert checked > 0


def test_shuffle_invariance():
    rng = random.Random(1)
    for _ in range(50):
        P = [tuple(F(rng.randint(-20, 20), 3) for _ in range(2)) for _ in range(6)]
        q = (F(rng.randint(-20, 20), 5), F(rng.randint(-20, 20), 5))
        Q = P[:]
        rng.shuffle(Q)
        assert point_in_hull(q, P) == point_in_hull(q, Q)
        assert squared_distance_to_convex_hull(q, P) == squared_distance_to_convex_hull(q, Q)
