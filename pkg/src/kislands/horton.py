"""Construction and exact certification of d-dimensional Horton sets.

A set in strongly general position, listed by increasing first coordinate,
is d-Horton when it has at most one point, or when

  (i)   for d > 2 its projection (last coordinate dropped) is (d-1)-Horton,
  (ii)  each residue class H_{i,p} = {q_j : j = i mod p}, with p the
        (d-1)-th prime (2, 3, 5, ...), is d-Horton, and
  (iii) every set I of at least two classes splits into nonempty J and I\\J
        with the union over J deep below the union over I\\J.

Every finite set on the line is 1-Horton.

The constructor places index i at first coordinate i and builds coordinate
j (2 <= j <= d) from the base-p_j digits of i, least significant first, so
low digits select the outermost classes and get the largest weights (see
``_coordinate``).  The scale s_j starts at ``scale_seed`` and doubles until
the exact verifier accepts the set.  When digit sums leave the set out of
strongly general position, coordinate j is bent by i^2 / (4 n^2).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .exact_geom import det
from .pointset import PointSet, is_strongly_general_position, sgp_witness

PRIMES = (2, 3, 5, 7, 11, 13)
DEFAULT_VERIFY_CAP = 256
DEFAULT_RETRY_CAP = 64


class HortonConstructionError(RuntimeError):
    pass


def horton_prime(d: int) -> int:
    """p_d: the prime used for residue classes in dimension d (p_2 = 2)."""
    if d < 2 or d - 2 >= len(PRIMES):
        raise ValueError(f"no class prime configured for d={d}")
    return PRIMES[d - 2]


@dataclass(frozen=True)
class HortonParams:
    dim: int
    n: int
    scale_seed: int = 2
    retry_cap: int = DEFAULT_RETRY_CAP

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dim must be at least 1")
        if self.n < 0:
            raise ValueError("n must be nonnegative")
        if self.scale_seed < 2:
            raise ValueError("scale_seed must be at least 2")


@dataclass
class HortonReport:
    strongly_general: bool
    projection_ok: bool
    classes_ok: bool
    partitions_ok: bool
    witnesses: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.strongly_general and self.projection_ok and self.classes_ok and self.partitions_ok

    def to_dict(self) -> dict:
        return {
            "strongly_general": self.strongly_general,
            "projection_ok": self.projection_ok,
            "classes_ok": self.classes_ok,
            "partitions_ok": self.partitions_ok,
            "certified": self.ok,
            "witnesses": self.witnesses,
        }


# -- deep below


def _hyperplanes(X, d):
    """Spanning d-tuples of X; a set with fewer than d points is padded with
    horizontal directions (the superset clause), giving one hyperplane."""
    if not X:
        return []
    if len(X) >= d:
        return [list(F) for F in combinations(X, d)]
    x0 = X[0]
    frame = [list(x) for x in X]
    for axis in range(d - 2, -1, -1):
        if len(frame) == d:
            break
        cand = list(x0)
        cand[axis] += 1
        trial = frame + [cand]
        edges = [[a - b for a, b in zip(p, x0)] for p in trial[1:]]
        # keep the direction only if it raises the rank and the span stays non-vertical
        if _rank_int(edges) == len(edges) and _rank_int([e[:-1] for e in edges]) == len(edges):
            frame = trial
    if len(frame) != d:
        raise ValueError("cannot pad a small set to a non-vertical hyperplane")
    return [frame]


def _rank_int(rows):
    from .exact_geom import _rank

    return _rank(rows) if rows else 0


class VerticalHyperplaneError(ValueError):
    pass


def _side(F, x, up_sign):
    p0 = F[0]
    rows = [[a - b for a, b in zip(p, p0)] for p in F[1:]] + [[a - b for a, b in zip(x, p0)]]
    v = det(rows)
    s = (v > 0) - (v < 0)
    return s * up_sign  # +1 above, -1 below, 0 on


def _up_sign(F):
    p0 = F[0]
    d = len(p0)
    rows = [[a - b for a, b in zip(p, p0)] for p in F[1:]] + [[0] * (d - 1) + [1]]
    v = det(rows)
    if v == 0:
        raise VerticalHyperplaneError(f"points {F} span a vertical hyperplane")
    return 1 if v > 0 else -1


def _below_all(points, planes, want):
    for F in planes:
        up = _up_sign(F)
        for x in points:
            if _side(F, x, up) != want:
                return False
    return True


def _deep_below(B, A, d) -> bool:
    if not A or not B:
        return True
    return _below_all(B, _hyperplanes(A, d), -1) and _below_all(A, _hyperplanes(B, d), +1)


def is_deep_below(B, A) -> bool:
    """Is B deep below A (and A high above B)?

    Every point of B lies strictly below every hyperplane spanned by d points
    of A, and every point of A strictly above every hyperplane spanned by d
    points of B.  A set with fewer than d points is extended by horizontal
    directions through its first point.
    """
    B = [tuple(p) for p in B]
    A = [tuple(p) for p in A]
    pts = A + B
    if not pts:
        return True
    d = len(pts[0])
    if any(len(p) != d for p in pts):
        raise ValueError("dimension mismatch")
    if set(A) & set(B):
        return False
    return _deep_below(B, A, d)


# -- verification


def _verify(pts, d, path, witnesses, fail_fast=False) -> bool:
    """Recursive check of clauses (i)-(iii) on integer points sorted by x1."""
    if d == 1 or len(pts) <= 1:
        return True
    p = horton_prime(d)
    classes = [pts[c::p] for c in range(p)]
    ok = _partitions(classes, d, path, witnesses, fail_fast)
    if fail_fast and not ok:
        return False
    if d > 2:
        proj = [q[:-1] for q in pts]
        if not _verify(proj, d - 1, path + ["proj"], witnesses, fail_fast):
            witnesses.append({"clause": "i", "path": "/".join(path) or "root", "detail": "projection not Horton"})
            ok = False
            if fail_fast:
                return False
    for c, cls in enumerate(classes):
        if not _verify(cls, d, path + [f"class{c}"], witnesses, fail_fast):
            ok = False
            if fail_fast:
                return False
    return ok


def _partitions(classes, d, path, witnesses, fail_fast=False) -> bool:
    p = len(classes)
    ok = True
    for size in range(2, p + 1):
        for I in combinations(range(p), size):
            found = False
            for jsize in range(1, size):
                for J in combinations(I, jsize):
                    low = [x for j in J for x in classes[j]]
                    high = [x for j in I if j not in J for x in classes[j]]
                    if _deep_below(low, high, d):
                        found = True
                        break
                if found:
                    break
            if not found:
                witnesses.append({"clause": "iii", "path": "/".join(path) or "root", "I": list(I)})
                ok = False
                if fail_fast:
                    return False
    return ok


def _int_points(S: PointSet):
    pts = sorted(S.int_coords)
    return pts


def verify_horton(S: PointSet, *, cap: int = DEFAULT_VERIFY_CAP) -> HortonReport:
    """Certify that ``S`` is a d-Horton set, reporting each clause separately."""
    from .enumeration import CapExceededError

    if S.n > cap:
        raise CapExceededError(f"n={S.n} exceeds the Horton verification cap {cap}; raise it with cap=")
    d = S.dim
    witnesses = []
    if d == 1:
        return HortonReport(True, True, True, True, [])
    sgp = is_strongly_general_position(S)
    if not sgp:
        w = sgp_witness(S)
        witnesses.append({"clause": "strongly_general_position", "detail": w[0] if w else None,
                          "indices": list(w[1]) if w else None})
        return HortonReport(False, False, False, False, witnesses)
    pts = _int_points(S)
    if len(pts) <= 1:
        return HortonReport(True, True, True, True, [])
    proj_ok = True
    if d > 2:
        proj_ok = _verify([p[:-1] for p in pts], d - 1, ["proj"], witnesses)
    p = horton_prime(d)
    classes = [pts[c::p] for c in range(p)]
    classes_ok = all([_verify(cls, d, [f"class{c}"], witnesses) for c, cls in enumerate(classes)])
    part_ok = _partitions(classes, d, [], witnesses)
    return HortonReport(True, proj_ok, classes_ok, part_ok, witnesses)


# -- construction


def _digits(i: int, base: int, length: int) -> list[int]:
    out = []
    for _ in range(length):
        out.append(i % base)
        i //= base
    return out


def _num_digits(n: int, base: int) -> int:
    L = 1
    while base ** L < n:
        L += 1
    return L


def _geometric(s: int, m: int) -> int:
    return sum(s ** j for j in range(m))


def _coordinate(n: int, base: int, s: int) -> list[int]:
    """Digit-weighted last coordinate.

    Residue c of a digit gets weight G(p-1) - G(p-1-c) with G(m) = 1 + s + ...
    + s^(m-1), so class 0 sits far below the others and each later class
    is a smaller step up.  Levels are spaced by s^(p-1).  For p = 2 this is
    the classic binary weighting.
    """
    L = _num_digits(n, base)
    top = _geometric(s, base - 1)
    cls = [top - _geometric(s, base - 1 - c) for c in range(base)]
    level = [s ** ((base - 1) * (L - 1 - l)) for l in range(L)]
    return [sum(cls[dg] * w for dg, w in zip(_digits(i, base, L), level)) for i in range(n)]


def _certified(rows, d) -> bool:
    S = PointSet(d, tuple(tuple(r) for r in rows))
    if not is_strongly_general_position(S):
        return False
    pts = _int_points(S)
    return _verify(pts, d, [], [], fail_fast=True)


def _build(d: int, n: int, scale_seed: int, retry_cap: int) -> list[list]:
    if d == 1:
        return [[i] for i in range(n)]
    lower = _build(d - 1, n, scale_seed, retry_cap)
    if n <= 1:
        return [row + [0] for row in lower]
    base = horton_prime(d)
    s = scale_seed
    for _ in range(retry_cap):
        last = _coordinate(n, base, s)
        rows = [row + [c] for row, c in zip(lower, last)]
        S = PointSet(d, tuple(tuple(r) for r in rows))
        if not is_strongly_general_position(S):
            # digit sums make parallelograms; a small convex bend removes them
            bend = 4 * n * n
            rows = [row + [c + Fraction(i * i, bend)] for i, (row, c) in enumerate(zip(lower, last))]
        if _certified(rows, d):
            return rows
        s *= 2
    raise HortonConstructionError(f"no certified {d}-Horton set with n={n} within {retry_cap} scale doublings")


def horton_d(d: int, n: int, params: HortonParams | None = None) -> PointSet:
    """A certified d-Horton set with ``n`` points (rational coordinates)."""
    if params is None:
        params = HortonParams(d, n)
    if d < 1:
        raise ValueError("d must be at least 1")
    if n < 0:
        raise ValueError("n must be nonnegative")
    rows = _build(d, n, params.scale_seed, params.retry_cap)
    return PointSet(d, tuple(tuple(r) for r in rows), f"horton d={d} n={n}")


def horton_planar(n: int, scale_seed: int = 2) -> PointSet:
    """Classic planar Horton set: x = index, y = weighted binary digits of the index."""
    return horton_d(2, n, HortonParams(2, n, scale_seed))
