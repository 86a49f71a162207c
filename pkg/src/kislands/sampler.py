"""Seeded uniform sampling from unit-volume convex bodies.

Each point i draws from its own Philox stream keyed by ``(seed, i)``, so a
sample is reproducible point by point and independent of how the work is
scheduled.  Coordinates are dyadic rationals with 53 fractional bits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .pointset import PointSet, is_general_position

BODIES = ("cube", "simplex", "ball")
FRACTION_BITS = 53
GP_CHECK_LIMIT = 64
_ONE = 1 << FRACTION_BITS

_ALIASES = {"unit_cube": "cube", "unit_simplex_scaled": "simplex", "ball_scaled": "ball"}


def _ball_radius(d: int) -> Fraction:
    # volume of the unit d-ball is pi^(d/2) / Gamma(d/2 + 1)
    unit = math.exp(0.5 * d * math.log(math.pi) - math.lgamma(0.5 * d + 1))
    return Fraction(unit ** (-1.0 / d))


@dataclass(frozen=True)
class ConvexBody:
    kind: str
    dim: int

    def __post_init__(self):
        kind = _ALIASES.get(self.kind, self.kind)
        if kind not in BODIES:
            raise ValueError(f"unknown body {self.kind!r}; choose from {BODIES}")
        if self.dim < 1 or (kind == "ball" and self.dim < 2):
            raise ValueError(f"unsupported body/dimension combination: {kind} in R^{self.dim}")
        object.__setattr__(self, "kind", kind)

    @property
    def radius(self) -> Fraction:
        return _ball_radius(self.dim)

    @property
    def simplex_scale(self) -> int:
        """Factor applied to the first coordinate of the standard simplex."""
        return math.factorial(self.dim)

    def volume(self) -> Fraction | float:
        """Exact for cube and simplex, a float for the ball."""
        if self.kind in ("cube", "simplex"):
            return Fraction(1)
        r = float(self.radius)
        d = self.dim
        return math.exp(0.5 * d * math.log(math.pi) - math.lgamma(0.5 * d + 1)) * r ** d

    def contains(self, p) -> bool:
        if self.kind == "cube":
            return all(0 <= c <= 1 for c in p)
        if self.kind == "simplex":
            x = (p[0] / self.simplex_scale,) + tuple(p[1:])
            return all(c >= 0 for c in x) and sum(x) <= 1
        r = self.radius
        return sum(c * c for c in p) <= r * r

    def _draw(self, rng: np.random.Generator) -> tuple:
        d = self.dim
        if self.kind == "cube":
            return tuple(Fraction(int(rng.integers(0, _ONE, dtype=np.uint64)), _ONE) for _ in range(d))
        if self.kind == "simplex":
            u = sorted(int(rng.integers(0, _ONE, dtype=np.uint64)) for _ in range(d))
            gaps = [u[0]] + [b - a for a, b in zip(u, u[1:])]
            x = [Fraction(g, _ONE) for g in gaps]
            x[0] *= self.simplex_scale
            return tuple(x)
        r = self.radius
        while True:
            g = rng.standard_normal(d)
            norm = float(np.sqrt(g @ g))
            if norm == 0.0:
                continue
            rad = float(r) * rng.random() ** (1.0 / d)
            p = tuple(Fraction(round(c / norm * rad * _ONE), _ONE) for c in g)
            if self.contains(p):
                return p


def _stream(seed: int, index: int) -> np.random.Generator:
    ss = np.random.SeedSequence([int(seed) & 0xFFFFFFFFFFFFFFFF, index])
    return np.random.Generator(np.random.Philox(ss))


def derive_seed(seed: int, *path: int) -> int:
    """A 64-bit seed derived from ``seed`` and an index path (e.g. trial number)."""
    ss = np.random.SeedSequence([int(seed) & 0xFFFFFFFFFFFFFFFF, *path])
    return int(ss.generate_state(1, dtype=np.uint64)[0])


def _offender(S: PointSet):
    """Largest index involved in some affinely dependent (d+1)-tuple."""
    from .enumeration import orientation_table

    t = orientation_table(S)
    bad = np.nonzero(t.signs == 0)[0]
    if len(bad):
        return int(t.combos[bad].max(axis=1).min())
    return S.n - 1


def sample_with_retries(body: ConvexBody, n: int, seed: int, *, check_general_position: bool | None = None):
    """Return ``(PointSet, retries)``.

    Any point taking part in a degeneracy is redrawn from its own stream
    until the set is in general position.  The check costs O(n^(d+1)) and by
    default only runs for ``n <= 64``.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if check_general_position is None:
        check_general_position = n <= GP_CHECK_LIMIT
    streams = [_stream(seed, i) for i in range(n)]
    pts = [body._draw(g) for g in streams]
    retries = 0
    label = f"{body.kind} d={body.dim} n={n} seed={seed}"
    while True:
        if len(set(pts)) != len(pts):
            seen = set()
            for i, p in enumerate(pts):
                if p in seen:
                    pts[i] = body._draw(streams[i])
                    retries += 1
                    break
                seen.add(p)
            continue
        S = PointSet(body.dim, tuple(pts), label)
        if not check_general_position or is_general_position(S):
            return S, retries
        i = _offender(S)
        pts[i] = body._draw(streams[i])
        retries += 1


def sample_set(body: ConvexBody | str, n: int, seed: int, dim: int | None = None, **kw) -> PointSet:
    """``n`` i.i.d. uniform points from ``body``, deterministic in ``(body, n, seed)``."""
    if isinstance(body, str):
        if dim is None:
            raise ValueError("dim is required when the body is given by name")
        body = ConvexBody(body, dim)
    return sample_with_retries(body, n, seed, **kw)[0]
