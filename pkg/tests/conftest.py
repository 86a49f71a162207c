import random
from itertools import combinations
from math import comb

import pytest

from kislands import PointSet, sample_set
from kislands.exact_geom import point_in_hull, OUTSIDE


def random_sets(count, dims, n_range, seed=0, body="cube"):
    """Deterministic list of sampled general-position sets."""
    rng = random.Random(seed)
    out = []
    for t in range(count):
        d = dims[t % len(dims)]
        n = rng.randint(*n_range)
        out.append(sample_set(body, n, rng.getrandbits(63), dim=d))
    return out


def brute_islands(S, k):
    """Count k-islands straight from the definition, one hull test per point."""
    total = 0
    for I in combinations(range(S.n), k):
        P = [S.points[i] for i in I]
        if all(point_in_hull(S.points[j], P) == OUTSIDE for j in range(S.n) if j not in I):
            total += 1
    return total


@pytest.fixture
def tri_plus_center():
    return PointSet.from_coords([(0, 0), (4, 0), (0, 4), (1, 1)])
