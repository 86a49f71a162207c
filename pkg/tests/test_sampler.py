import math

import numpy as np
import pytest

from kislands import ConvexBody, derive_seed, is_general_position, sample_set
from kislands.sampler import sample_with_retries


def test_deterministic():
    a = sample_set("cube", 5, 42, dim=2)
    b = sample_set("cube", 5, 42, dim=2)
    assert a == b and a.points == b.points
    assert sample_set("cube", 5, 43, dim=2) != a


def test_prefix_stable():
    # per-point streams: a longer sample extends a shorter one
    a = sample_set("cube", 10, 9, dim=3, check_general_position=False)
    b = sample_set("cube", 20, 9, dim=3, check_general_position=False)
    assert b.points[:10] == a.points


@pytest.mark.parametrize("body", ["cube", "simplex", "ball"])
@pytest.mark.parametrize("d", [2, 3])
def test_membership_and_dyadic(body, d):
    B = ConvexBody(body, d)
    S = sample_set(B, 200, 5, check_general_position=False)
    for p in S.points:
        assert B.contains(p)
        assert all((c.denominator & (c.denominator - 1)) == 0 for c in p)
        assert all(c.denominator <= 2 ** 53 for c in p)


def test_general_position_after_sampling():
    for seed in range(5):
        assert is_general_position(sample_set("simplex", 30, seed, dim=2))


def test_resample_fixes_degenerate_points(monkeypatch):
    # a coarse body forces collisions and collinear triples
    from kislands import sampler

    def coarse(self, rng):
        return tuple(sampler.Fraction(int(rng.integers(0, 4)), 4) for _ in range(self.dim))

    monkeypatch.setattr(sampler.ConvexBody, "_draw", coarse)
    S, retries = sample_with_retries(ConvexBody("cube", 2), 4, 1)
    assert retries > 0
    assert is_general_position(S) and len(set(S.points)) == 4


def test_volumes():
    for d in (2, 3, 4):
        assert ConvexBody("cube", d).volume() == 1
        assert ConvexBody("simplex", d).volume() == 1
        assert abs(ConvexBody("ball", d).volume() - 1) < 1e-9


def test_cube_mean_clt():
    S = sample_set("cube", 10000, 2024, dim=2)
    mean = np.mean([float(p[0]) for p in S.points])
    assert abs(mean - 0.5) <= 4 * (12 * 10000) ** -0.5


def test_bad_bodies():
    with pytest.raises(ValueError):
        ConvexBody("torus", 2)
    with pytest.raises(ValueError):
        ConvexBody("ball", 1)
    with pytest.raises(ValueError):
        sample_set("cube", -1, 0, dim=2)


def test_derive_seed():
    assert derive_seed(1, 2) == derive_seed(1, 2)
    assert derive_seed(1, 2) != derive_seed(1, 3)
    assert 0 <= derive_seed(2 ** 64 - 1, 0) < 2 ** 64
