"""Exact geometric kernel over rationals.

Every predicate here works on tuples of :class:`fractions.Fraction` (or
ints) and never rounds.  Points are plain tuples; the dimension of a point is
its length.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import factorial
from typing import Sequence

Rational = Fraction
Point = tuple  # tuple of Rational, length d

INTERIOR = "interior"
BOUNDARY = "boundary"
OUTSIDE = "outside"


class DimensionError(ValueError):
    """Points of inconsistent dimension were passed to a predicate."""


class DegenerateError(ValueError):
    """Input violates an affine-independence requirement."""


def as_point(coords) -> Point:
    return tuple(Fraction(c) for c in coords)


def _check_simplex(simplex: Sequence[Point]) -> int:
    d = len(simplex[0]) if simplex else 0
    if d < 1 or len(simplex) != d + 1:
        raise DimensionError(f"need d+1 points in R^d, got {len(simplex)} points of dimension {d}")
    for p in simplex:
        if len(p) != d:
            raise DimensionError(f"point {p!r} has dimension {len(p)}, expected {d}")
    return d


def det(matrix: Sequence[Sequence]) -> Fraction | int:
    """Exact determinant by fraction-free Bareiss elimination.

    Entries may be ints or Fractions; integer input stays in the integers.
    """
    n = len(matrix)
    if n == 0:
        return 1
    if n == 1:
        return matrix[0][0]
    if n == 2:
        return matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0]
    if n == 3:
        (a, b, c), (d, e, f), (g, h, i) = matrix
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    if any(isinstance(x, Fraction) and x.denominator != 1 for row in matrix for x in row):
        return _det_gauss(matrix)
    m = [[int(x) for x in row] for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _det_gauss(matrix):
    m = [[Fraction(x) for x in row] for row in matrix]
    n = len(m)
    result = Fraction(1)
    for k in range(n):
        pivot = next((r for r in range(k, n) if m[r][k] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != k:
            m[k], m[pivot] = m[pivot], m[k]
            result = -result
        result *= m[k][k]
        for i in range(k + 1, n):
            f = m[i][k] / m[k][k]
            if f:
                for j in range(k, n):
                    m[i][j] -= f * m[k][j]
    return result


def orientation_det(simplex: Sequence[Point]):
    """Determinant of the edge vectors ``p_i - p_0`` (rows)."""
    _check_simplex(simplex)
    p0 = simplex[0]
    return det([[a - b for a, b in zip(p, p0)] for p in simplex[1:]])


def orientation(simplex: Sequence[Point]) -> int:
    """Sign in {-1, 0, +1} of the orientation determinant of d+1 points in R^d."""
    v = orientation_det(simplex)
    return (v > 0) - (v < 0)


def simplex_volume(simplex: Sequence[Point]) -> Fraction:
    d = _check_simplex(simplex)
    return Fraction(abs(orientation_det(simplex)), factorial(d))


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def _sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def _solve(matrix, rhs):
    """Solve a nonsingular square system exactly (Gauss-Jordan on Fractions)."""
    n = len(matrix)
    m = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    for k in range(n):
        pivot = next((r for r in range(k, n) if m[r][k] != 0), None)
        if pivot is None:
            raise DegenerateError("singular system")
        m[k], m[pivot] = m[pivot], m[k]
        inv = 1 / m[k][k]
        m[k] = [x * inv for x in m[k]]
        for i in range(n):
            if i != k and m[i][k] != 0:
                f = m[i][k]
                m[i] = [x - f * y for x, y in zip(m[i], m[k])]
    return [row[n] for row in m]


def _check_same_dim(q, pts):
    d = len(q)
    for p in pts:
        if len(p) != d:
            raise DimensionError(f"point {p!r} has dimension {len(p)}, expected {d}")
    return d


def affine_rank(points: Sequence[Point]) -> int:
    """Dimension of the affine hull of ``points`` (-1 for the empty list)."""
    if not points:
        return -1
    p0 = points[0]
    rows = [list(_sub(p, p0)) for p in points[1:]]
    return _rank(rows)


def _rank(rows) -> int:
    m = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][col] != 0:
                f = m[r][col] / m[rank][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[rank])]
        rank += 1
    return rank


def _projection(q, A):
    """Squared distance from q to aff(A) and the affine coefficients of the foot.

    Returns ``(sqdist, lambdas)`` where ``lambdas`` sums to one.  Raises
    :class:`DegenerateError` if ``A`` is affinely dependent.
    """
    a0 = A[0]
    edges = [_sub(a, a0) for a in A[1:]]
    w = _sub(q, a0)
    if not edges:
        return Fraction(_dot(w, w)), [Fraction(1)]
    gram = [[_dot(u, v) for v in edges] for u in edges]
    rhs = [_dot(u, w) for u in edges]
    try:
        mu = _solve(gram, rhs)
    except DegenerateError:
        raise DegenerateError("affinely dependent point list") from None
    # |w|^2 - |proj|^2, where proj = sum mu_i e_i and proj.w = mu.rhs
    sq = Fraction(_dot(w, w)) - sum(m * r for m, r in zip(mu, rhs))
    return sq, [1 - sum(mu)] + mu


def squared_distance_to_affine_hull(q: Point, A: Sequence[Point]) -> Fraction:
    """Exact squared Euclidean distance from ``q`` to aff(A).

    Computed as a ratio of Gram determinants,
    ``G(a1-a0, ..., am-a0, q-a0) / G(a1-a0, ..., am-a0)``.
    """
    if not A:
        raise ValueError("A must be nonempty")
    _check_same_dim(q, A)
    a0 = A[0]
    edges = [_sub(a, a0) for a in A[1:]]
    w = _sub(q, a0)
    base = [[_dot(u, v) for v in edges] for u in edges]
    g0 = det(base)
    if g0 == 0:
        raise DegenerateError("A is affinely dependent")
    ext = edges + [w]
    g1 = det([[_dot(u, v) for v in ext] for u in ext])
    return Fraction(g1) / Fraction(g0)


def squared_distance_to_convex_hull(q: Point, P: Sequence[Point]) -> Fraction:
    """Exact squared distance from ``q`` to conv(P).

    Minimum over affinely independent subsets T of P whose orthogonal
    projection of ``q`` falls inside conv(T).  Exponential in |P|; meant for
    the small sets used by the canonical ordering.
    """
    if not P:
        raise ValueError("P must be nonempty")
    d = _check_same_dim(q, P)
    pts = list(dict.fromkeys(tuple(p) for p in P))
    best = None
    for size in range(1, min(len(pts), d + 1) + 1):
        for T in combinations(pts, size):
            try:
                sq, lam = _projection(q, T)
            except DegenerateError:
                continue
            if all(x >= 0 for x in lam) and (best is None or sq < best):
                best = sq
                if best == 0:
                    return best
    return best


def _in_closed_simplex(q, T) -> bool:
    # T affinely independent, |T| <= d+1
    sq, lam = _projection(q, T)
    return sq == 0 and all(x >= 0 for x in lam)


def in_convex_hull(q: Point, P: Sequence[Point]) -> bool:
    """Closed-hull membership by Caratheodory over (d+1)-subsets."""
    d = _check_same_dim(q, P)
    pts = list(dict.fromkeys(tuple(p) for p in P))
    if affine_rank(pts) == d:
        for T in combinations(pts, d + 1):
            s = orientation(T)
            if s == 0:
                continue
            ok = True
            for i in range(d + 1):
                t = orientation(T[:i] + (q,) + T[i + 1:])
                if t == -s:
                    ok = False
                    break
            if ok:
                return True
        return False
    # lower-dimensional hull: test affinely independent subsets directly
    for size in range(1, min(len(pts), d + 1) + 1):
        for T in combinations(pts, size):
            if affine_rank(list(T)) != size - 1:
                continue
            if _in_closed_simplex(q, T):
                return True
    return False


def point_in_hull(q: Point, P: Sequence[Point]) -> str:
    """Classify ``q`` as ``"interior"``, ``"boundary"`` or ``"outside"`` of conv(P).

    Interior means the topological interior in R^d, so a hull of dimension
    below d has no interior points.
    """
    if not P:
        raise ValueError("P must be nonempty")
    d = _check_same_dim(q, P)
    if not in_convex_hull(q, P):
        return OUTSIDE
    pts = list(dict.fromkeys(tuple(p) for p in P))
    if affine_rank(pts) < d:
        return BOUNDARY
    # q is on the boundary iff it lies on a supporting hyperplane spanned by
    # d points of P
    for F in combinations(pts, d):
        s = orientation(F + (q,))
        if s != 0:
            continue
        signs = {orientation(F + (p,)) for p in pts}
        signs.discard(0)
        if not signs:
            continue  # F affinely dependent
        if len(signs) == 1:
            return BOUNDARY
    return INTERIOR
