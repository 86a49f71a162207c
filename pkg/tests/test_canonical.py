from itertools import combinations, permutations
import random

import pytest

from conftest import random_sets
from kislands import (PointSet, canonical_ordering, check_box_containment, check_canonical_conditions,
                      delta_star_contains_all, simplex_volume)
from kislands.canonical import passing_orderings


EXAMPLE = PointSet.from_coords([(0, 3), (4, 0), (0, 0), (1, 1)])


def test_worked_example():
    rep = canonical_ordering(EXAMPLE)
    assert rep.permutation == [0, 1, 2, 3]
    assert rep.a == 1
    assert rep.delta_volume == 6
    assert all(rep.condition_flags.values())


def test_simplex_only():
    Q = PointSet.from_coords([(0, 0), (5, 1), (1, 3)])
    rep = canonical_ordering(Q)
    assert rep.a == 0
    assert [p for p in permutations(range(3)) if check_canonical_conditions(Q, p).passed] == [tuple(rep.permutation)]


def test_exterior_point_last():
    Q = PointSet.from_coords([(0, 0), (6, 0), (0, 6), (7, 7)])
    rep = canonical_ordering(Q)
    assert rep.a == 0
    assert passing_orderings(Q, permutations(range(4))) == [rep.permutation]


def test_swap_first_two_breaks_l2():
    rep = canonical_ordering(EXAMPLE)
    p = rep.permutation[:]
    p[0], p[1] = p[1], p[0]
    r = check_canonical_conditions(EXAMPLE, p)
    assert r.first_violation[0] == "L2"
    assert not r.flags["L2"]


def test_inside_point_moved_after_outside_point():
    Q = PointSet.from_coords([(0, 0), (10, 0), (0, 9), (2, 2), (12, 7)])
    rep = canonical_ordering(Q)
    assert rep.a == 1
    p = rep.permutation[:]
    p[3], p[4] = p[4], p[3]
    r = check_canonical_conditions(Q, p)
    assert not r.passed
    name, witness = r.first_violation
    assert name in ("L4", "L5") and witness


def test_shuffle_invariance():
    rng = random.Random(0)
    for Q in random_sets(15, [2, 3], (4, 7), seed=21):
        rep = canonical_ordering(Q)
        idx = list(range(Q.n))
        rng.shuffle(idx)
        R = Q.take(idx)
        rep2 = canonical_ordering(R)
        assert [Q.points[i] for i in rep.permutation] == [R.points[i] for i in rep2.permutation]


def test_l1_volume_is_maximum():
    for Q in random_sets(10, [2, 3], (4, 8), seed=22):
        rep = canonical_ordering(Q)
        best = max(simplex_volume(Q.subset(T)) for T in combinations(range(Q.n), Q.dim + 1))
        assert rep.delta_volume == best
        assert 0 <= rep.a <= max(0, Q.n - Q.dim - 1)


def test_delta_star():
    assert delta_star_contains_all(EXAMPLE, [0, 1, 2, 3])
    with pytest.raises(ValueError):
        delta_star_contains_all(EXAMPLE, [0, 3, 1, 2])
    # the unit triangle is not maximal here and (3,3) sits beyond the line x + y = 2
    Q = PointSet.from_coords([(0, 0), (1, 0), (0, 1), (3, 3)])
    assert not delta_star_contains_all(Q, [0, 1, 2, 3], require_l1=False)
    assert delta_star_contains_all(Q, canonical_ordering(Q).permutation)
    tri = PointSet.from_coords([(0, 0), (3, 1), (1, 4)])
    assert delta_star_contains_all(tri, canonical_ordering(tri).permutation)


def test_box_containment():
    for Q in random_sets(20, [2, 3], (4, 7), seed=23, body="simplex"):
        perm = canonical_ordering(Q).permutation
        assert check_box_containment(Q, perm, unit_volume_context=True)
    big = PointSet.from_coords([(0, 0), (2, 0), (0, 2)])
    perm = canonical_ordering(big).permutation
    # area 2: clause (a) alone holds, the unit-volume clause does not
    assert check_box_containment(big, perm)
    assert not check_box_containment(big, perm, unit_volume_context=True)


def test_errors():
    with pytest.raises(ValueError):
        canonical_ordering(PointSet.from_coords([(0, 0), (1, 0)]))
    with pytest.raises(ValueError):
        canonical_ordering(PointSet.from_coords([(0, 0), (1, 1), (2, 2), (0, 1)]))
    with pytest.raises(ValueError):
        check_canonical_conditions(EXAMPLE, [0, 0, 1, 2])


def test_exhaustive_uniqueness_small():
    for Q in random_sets(30, [2, 3], (4, 6), seed=24):
        rep = canonical_ordering(Q)
        assert passing_orderings(Q, permutations(range(Q.n))) == [rep.permutation]
