from itertools import combinations
from math import comb

import pytest

from conftest import brute_islands, random_sets
from kislands import (CapExceededError, PointSet, count_all_islands, count_k_subsets, hole_profile,
                      is_convex_position, is_hole, is_island, iter_k_holes, largest_hole_size)
from kislands.exact_geom import DegenerateError
from kislands.enumeration import count_convex_subsets


def test_convex_position_examples():
    assert is_convex_position([(0, 0), (1, 0), (0, 1), (1, 1)])
    assert not is_convex_position([(0, 0), (3, 0), (0, 3), (1, 1)])
    assert is_convex_position([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)])


def test_island_examples(tri_plus_center):
    S = tri_plus_center
    assert is_island(S, [0, 1, 3])
    assert not is_island(S, [0, 1, 2])
    assert is_island(S, range(4))
    with pytest.raises(ValueError):
        is_island(S, [])


def test_hole_examples(tri_plus_center):
    S = tri_plus_center
    assert is_hole(S, [0, 1, 3])
    assert not is_hole(S, [0, 1, 2])
    assert all(is_hole(S, [i]) for i in range(4))


def test_hole_needs_general_position():
    S = PointSet.from_coords([(0, 0), (1, 1), (2, 2), (0, 3)])
    with pytest.raises(DegenerateError):
        is_hole(S, [0, 3])
    assert is_hole(S, [0, 1, 3], raw=True)


def test_count_examples():
    S = random_sets(1, [2], (6, 6), seed=3)[0]
    assert count_k_subsets(S, 2, "island").value == 15
    pent = PointSet.from_coords([(0, 0), (4, 0), (5, 3), (2, 5), (-1, 3)])
    assert count_k_subsets(pent, 3, "hole").value == 10
    tri = PointSet.from_coords([(0, 0), (1, 0), (0, 1)])
    for kind in ("hole", "island", "convex"):
        assert count_k_subsets(tri, 5, kind).value == 0


def test_all_islands_examples(tri_plus_center):
    assert count_all_islands(tri_plus_center, "direct").value == 14
    assert count_all_islands(tri_plus_center, "convex_bijection").value == 14
    assert count_all_islands(PointSet.from_coords([(1, 2)])).value == 1
    quad = PointSet.from_coords([(0, 0), (3, 0), (4, 2), (1, 3)])
    assert count_all_islands(quad, "direct").value == 15
    assert count_all_islands(quad, "convex_bijection").value == 15


def test_all_islands_cap():
    S = random_sets(1, [2], (21, 21))[0]
    with pytest.raises(CapExceededError, match="cap"):
        count_all_islands(S)
    assert count_all_islands(S, "convex_bijection", cap=21).value > 0


def test_largest_hole_examples(tri_plus_center):
    pent = PointSet.from_coords([(0, 0), (4, 0), (5, 3), (2, 5), (-1, 3)])
    assert largest_hole_size(pent) == 5
    assert largest_hole_size(tri_plus_center) == 3


@pytest.mark.parametrize("d", [2, 3])
def test_pruned_matches_brute_and_definition(d):
    for S in random_sets(12, [d], (d + 2, 9), seed=d):
        for k in range(1, S.n + 1):
            for kind in ("hole", "island", "convex"):
                a = count_k_subsets(S, k, kind, method="brute").value
                b = count_k_subsets(S, k, kind, method="pruned").value
                assert a == b, (kind, k)
        for k in (d + 1, d + 2):
            if k <= S.n:
                assert count_k_subsets(S, k, "island").value == brute_islands(S, k)


def test_monotone_and_trivial_counts():
    for S in random_sets(20, [2, 3], (4, 10), seed=11):
        d = S.dim
        for k in range(1, S.n + 1):
            h = count_k_subsets(S, k, "hole").value
            i = count_k_subsets(S, k, "island").value
            assert h <= i <= comb(S.n, k)
            if k <= d:
                assert i == comb(S.n, k)


def test_hole_is_island_pointwise():
    S = random_sets(1, [2], (9, 9), seed=2)[0]
    for k in (3, 4, 5):
        for H in combinations(range(S.n), k):
            if is_hole(S, H):
                assert is_island(S, H)


def test_lower_bounds():
    for S in random_sets(10, [2], (5, 12), seed=8):
        n = S.n
        assert count_k_subsets(S, 3, "hole").value >= comb(n - 1, 2)
        for k in range(2, n + 1):
            assert count_k_subsets(S, k, "island").value * comb(k, 2) >= comb(n, 2)


def test_bijection_and_convex_methods():
    for S in random_sets(10, [2, 3], (3, 11), seed=5):
        direct = count_all_islands(S, "direct").value
        assert count_all_islands(S, "convex_bijection").value == direct
        assert count_convex_subsets(S, method="search") == direct


def test_hole_profile_and_iteration():
    S = random_sets(1, [2], (14, 14), seed=6)[0]
    prof = hole_profile(S)
    for k in range(1, len(prof)):
        assert prof[k] == count_k_subsets(S, k, "hole").value
    assert prof[len(prof) - 1] > 0 and len(prof) - 1 == largest_hole_size(S)
    holes = list(iter_k_holes(S, 4))
    assert holes == sorted(holes) and len(holes) == prof[4]


def test_bad_arguments():
    S = random_sets(1, [2], (5, 5))[0]
    with pytest.raises(ValueError):
        count_k_subsets(S, 0)
    with pytest.raises(ValueError):
        count_k_subsets(S, 3, "polygon")
    with pytest.raises(ValueError):
        count_all_islands(S, "magic")
