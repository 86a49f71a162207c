"""Exact counting of convex-position subsets, k-islands, k-holes and all islands.

The workhorse is :class:`OrientationTable`: exact orientation signs of every
(d+1)-subset of a point set (integer arithmetic on the common-denominator
scaling of the coordinates), and, derived from it, for every (d+1)-subset T
the bitmask of points lying strictly inside the simplex conv(T).

Under general position a point lies in conv(I) iff it lies strictly inside
some simplex spanned by points of I (Caratheodory, and no point can sit on a
simplex boundary).  With ``cover(I)`` the union of those masks:

* I is in convex position  iff  ``cover(I) & I == 0``
* I is an island           iff  ``cover(I) & ~I == 0``
* I is a hole              iff  ``cover(I) == 0``

Holes and convex-position sets are closed under taking subsets, which the
pruned searches exploit.  The brute-force paths walk all C(n, k) subsets and
remain the reference.
"""

from __future__ import annotations

import weakref
from dataclasses import dataclass
from functools import cached_property, cmp_to_key
from itertools import combinations, permutations
from math import comb
from typing import Iterable, Sequence

import numpy as np

from .exact_geom import BOUNDARY, INTERIOR, OUTSIDE, DegenerateError, point_in_hull
from .pointset import PointSet, is_general_position

KINDS = ("hole", "island", "convex")
DEFAULT_ALL_ISLANDS_CAP = 20
DEFAULT_HOLE_CAP = 128


class CapExceededError(ValueError):
    """The requested enumeration exceeds a configured size cap."""


@dataclass(frozen=True)
class CountResult:
    value: int
    n: int
    k: int | None
    kind: str

    def __int__(self):
        return self.value


def _det_objects(rows):
    """Determinant of a matrix whose entries are equal-length object arrays."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = None
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in rows[1:]]
        term = rows[0][j] * _det_objects(minor)
        if total is None:
            total = term
        elif j % 2:
            total = total - term
        else:
            total = total + term
    return total


def _perm_parity(perm) -> int:
    perm = list(perm)
    sign = 1
    for i in range(len(perm)):
        while perm[i] != i:
            j = perm[i]
            perm[i], perm[j] = perm[j], perm[i]
            sign = -sign
    return sign


class OrientationTable:
    """Orientation signs and simplex-interior masks for one point set."""

    def __init__(self, S: PointSet):
        self.S = S
        self.n = S.n
        self.d = S.dim
        n, d = self.n, self.d
        if n >= d + 1:
            self.combos = np.array(list(combinations(range(n), d + 1)), dtype=np.intp)
        else:
            self.combos = np.empty((0, d + 1), dtype=np.intp)
        self.signs = self._combo_signs()

    def _combo_signs(self) -> np.ndarray:
        if len(self.combos) == 0:
            return np.empty(0, dtype=np.int8)
        pts = np.empty((self.n, self.d), dtype=object)
        for i, p in enumerate(self.S.int_coords):
            for j, c in enumerate(p):
                pts[i, j] = c
        base = pts[self.combos[:, 0]]
        rows = []
        for r in range(1, self.d + 1):
            edge = pts[self.combos[:, r]] - base
            rows.append([edge[:, j] for j in range(self.d)])
        value = _det_objects(rows)
        return np.array([(v > 0) - (v < 0) for v in value], dtype=np.int8)

    @property
    def has_zero(self) -> bool:
        return bool(len(self.signs)) and bool((self.signs == 0).any())

    @cached_property
    def full(self) -> np.ndarray:
        """Dense sign array indexed by arbitrary (d+1)-tuples of indices."""
        n, d = self.n, self.d
        arr = np.zeros((n,) * (d + 1), dtype=np.int8)
        if len(self.combos) == 0:
            return arr
        for perm in permutations(range(d + 1)):
            idx = tuple(self.combos[:, p] for p in perm)
            arr[idx] = _perm_parity(perm) * self.signs
        return arr

    def sign(self, idx: Sequence[int]) -> int:
        return int(self.full[tuple(idx)])

    @cached_property
    def inside(self) -> dict:
        """Map each sorted (d+1)-tuple to the bitmask of points strictly inside its simplex."""
        n, d = self.n, self.d
        out = {}
        if len(self.combos) == 0:
            return out
        full = self.full
        ar = np.arange(n)[None, :]
        chunk = max(1, 2_000_000 // max(n, 1))
        for start in range(0, len(self.combos), chunk):
            cb = self.combos[start:start + chunk]
            s = self.signs[start:start + chunk][:, None]
            ok = np.ones((len(cb), n), dtype=bool)
            for i in range(d + 1):
                idx = tuple(ar if j == i else cb[:, j][:, None] for j in range(d + 1))
                ok &= full[idx] == s
            ok &= s != 0
            packed = np.packbits(ok, axis=1, bitorder="little")
            for row, bits in zip(cb, packed):
                out[tuple(int(x) for x in row)] = int.from_bytes(bits.tobytes(), "little")
        return out

    def cover(self, idx: Sequence[int]) -> int:
        """Union of interior masks over all simplices spanned by ``idx``."""
        inside = self.inside
        m = 0
        for T in combinations(sorted(idx), self.d + 1):
            m |= inside[T]
        return m


_TABLES: "weakref.WeakKeyDictionary[PointSet, OrientationTable]" = weakref.WeakKeyDictionary()


def orientation_table(S: PointSet) -> OrientationTable:
    t = _TABLES.get(S)
    if t is None:
        t = OrientationTable(S)
        _TABLES[S] = t
    return t


def _gp_table(S: PointSet) -> OrientationTable:
    if not is_general_position(S):
        raise DegenerateError("point set is not in general position")
    return orientation_table(S)


def _mask(idx: Iterable[int]) -> int:
    m = 0
    for i in idx:
        m |= 1 << i
    return m


def _selector(S: PointSet, I: Iterable[int]) -> tuple:
    idx = tuple(sorted(set(int(i) for i in I)))
    if not idx:
        raise ValueError("subset must be nonempty")
    if idx[0] < 0 or idx[-1] >= S.n:
        raise IndexError(f"subset index out of range for n={S.n}")
    return idx


# -- single-subset predicates (generic exact kernel, no general position needed)


def is_convex_position(P: Sequence) -> bool:
    """No point of P lies in the convex hull of the others."""
    pts = [tuple(p) for p in P]
    for i, p in enumerate(pts):
        rest = pts[:i] + pts[i + 1:]
        if rest and point_in_hull(p, rest) != OUTSIDE:
            return False
    return True


def is_island(S: PointSet, I: Iterable[int]) -> bool:
    """conv(I) contains no point of S outside I."""
    idx = _selector(S, I)
    chosen = set(idx)
    hull = S.subset(idx)
    return all(point_in_hull(p, hull) == OUTSIDE for j, p in enumerate(S.points) if j not in chosen)


def is_hole(S: PointSet, H: Iterable[int], *, raw: bool = False) -> bool:
    """H is in convex position and conv(H) has no other point of S.

    The equivalence with the literal definition (all of H on the hull
    boundary, hull interior free of S) needs general position; degenerate
    inputs raise unless ``raw=True`` selects the literal definition.
    """
    idx = _selector(S, H)
    if raw:
        hull = S.subset(idx)
        if any(point_in_hull(p, hull) == INTERIOR for p in hull):
            return False
        for p in hull:
            rest = [q for q in hull if q != p]
            if rest and point_in_hull(p, rest) == INTERIOR:
                return False
        return all(point_in_hull(p, hull) != INTERIOR for j, p in enumerate(S.points) if j not in idx)
    if not is_general_position(S):
        raise DegenerateError("is_hole requires general position; pass raw=True for the literal definition")
    return is_convex_position(S.subset(idx)) and is_island(S, idx)


# -- mask-based classification (general position)


def classify(S: PointSet, I: Iterable[int]) -> dict:
    """Convex/island/hole flags of one subset via the orientation table."""
    idx = _selector(S, I)
    t = _gp_table(S)
    cov = t.cover(idx)
    m = _mask(idx)
    return {"convex": cov & m == 0, "island": cov & ~m == 0, "hole": cov == 0}


def _matches(kind: str, cov: int, m: int) -> bool:
    if kind == "hole":
        return cov == 0
    if kind == "island":
        return cov & ~m == 0
    return cov & m == 0


def _count_brute(t: OrientationTable, k: int, kind: str) -> int:
    d = t.d
    inside = t.inside
    count = 0
    for sub in combinations(range(t.n), k):
        cov = 0
        for T in combinations(sub, d + 1):
            cov |= inside[T]
        if _matches(kind, cov, _mask(sub)):
            count += 1
    return count


def _grow_hereditary(t: OrientationTable, kind: str, max_size: int, on_visit) -> None:
    """DFS over index-increasing extensions of sets closed under subsets.

    ``kind`` is "hole" or "convex".  ``on_visit(idx, cover)`` is called for
    every member set of size >= 1 and size <= ``max_size``.
    """
    d, n = t.d, t.n
    inside = t.inside

    def rec(idx, cov, m):
        on_visit(idx, cov)
        if len(idx) == max_size:
            return
        for p in range(idx[-1] + 1, n):
            new = cov
            bit = 1 << p
            if len(idx) >= d:
                if kind == "convex" and cov & bit:
                    continue
                for F in combinations(idx, d):
                    new |= inside[F + (p,)]
            m2 = m | bit
            if kind == "hole":
                if new:
                    continue
            elif new & m2:
                continue
            rec(idx + (p,), new, m2)

    for p in range(n):
        rec((p,), 0, 1 << p)


def _count_pruned(t: OrientationTable, k: int, kind: str) -> int:
    counter = [0]
    if kind in ("hole", "convex"):
        def visit(idx, cov):
            if len(idx) == k:
                counter[0] += 1
        _grow_hereditary(t, kind, k, visit)
        return counter[0]
    # islands <-> convex sets G with |conv(G) cap S| = k; the closure only
    # grows along the search, so prune once it exceeds k
    d, n = t.d, t.n
    inside = t.inside

    def rec(idx, cov, m):
        size = bin(cov | m).count("1")
        if size == k:
            counter[0] += 1
        for p in range(idx[-1] + 1, n):
            bit = 1 << p
            if cov & bit:
                continue
            new = cov
            if len(idx) >= d:
                for F in combinations(idx, d):
                    new |= inside[F + (p,)]
            m2 = m | bit
            if new & m2:
                continue
            if bin(new | m2).count("1") > k:
                continue
            rec(idx + (p,), new, m2)

    for p in range(n):
        rec((p,), 0, 1 << p)
    return counter[0]


def count_k_subsets(S: PointSet, k: int, kind: str = "hole", *, method: str = "auto") -> CountResult:
    """Exact number of k-subsets of S that are holes, islands, or in convex position.

    ``method`` is ``"brute"`` (all C(n, k) subsets), ``"pruned"`` (search
    over hereditary families), or ``"auto"``.
    """
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}")
    if k < 1:
        raise ValueError("k must be at least 1")
    n, d = S.n, S.dim
    if k > n:
        return CountResult(0, n, k, kind)
    t = _gp_table(S)
    # in general position every subset of at most d+1 points is convex, and
    # for k <= d no other point can meet its affine hull
    if k <= d or (k == d + 1 and kind == "convex"):
        return CountResult(comb(n, k), n, k, kind)
    if method == "auto":
        method = "pruned" if comb(n, k) > 5000 else "brute"
    if method == "brute":
        value = _count_brute(t, k, kind)
    elif method == "pruned":
        value = _count_pruned(t, k, kind)
    else:
        raise ValueError(f"unknown method {method!r}")
    return CountResult(value, n, k, kind)


def hole_profile(S: PointSet, *, cap: int = DEFAULT_HOLE_CAP) -> list[int]:
    """``profile[k]`` = number of k-holes, for k = 0..largest hole size."""
    if S.n > cap:
        raise CapExceededError(f"n={S.n} exceeds the hole-search cap {cap}; raise it with cap=")
    if S.n == 0:
        return [0]
    t = _gp_table(S)
    profile = [0] * (S.n + 1)

    def visit(idx, cov):
        profile[len(idx)] += 1

    _grow_hereditary(t, "hole", S.n, visit)
    while len(profile) > 1 and profile[-1] == 0:
        profile.pop()
    return profile


def largest_hole_size(S: PointSet, *, cap: int = DEFAULT_HOLE_CAP) -> int:
    """Size of the largest hole, found by exhaustive search over holes."""
    return len(hole_profile(S, cap=cap)) - 1


def _count_all_direct(t: OrientationTable) -> int:
    """Walk every nonempty subset, maintaining the cover incrementally."""
    d, n = t.d, t.n
    inside = t.inside
    count = 0
    stack = [((p,), 0, 1 << p) for p in range(n - 1, -1, -1)]
    while stack:
        idx, cov, m = stack.pop()
        if cov & ~m == 0:
            count += 1
        last = idx[-1]
        for p in range(n - 1, last, -1):
            new = cov
            if len(idx) >= d:
                for F in combinations(idx, d):
                    new |= inside[F + (p,)]
            stack.append((idx + (p,), new, m | (1 << p)))
    return count


def _count_convex_planar(t: OrientationTable) -> int:
    """Convex-position subsets of a planar set by chain dynamic programming.

    Each convex polygon is rooted at its lexicographically smallest vertex
    p; the remaining vertices are larger, so they sort by angle around p and
    the polygon is a left-turning chain in that order.  O(n^4) overall.
    """
    n = t.n
    full = t.full
    pts = t.S.points
    order = sorted(range(n), key=lambda i: pts[i])
    total = n + comb(n, 2)
    for pos, p in enumerate(order):
        cand = order[pos + 1:]
        # angular order around p: a before b iff (p, a, b) turns left
        cand.sort(key=cmp_to_key(lambda a, b: -int(full[p, a, b])))
        m = len(cand)
        # ways[i][j]: convex chains p -> ... -> cand[i] -> cand[j] (>= 1 edge from p)
        ways = [[0] * m for _ in range(m)]
        start = [1] * m  # chain p -> cand[j]
        for j in range(m):
            cj = cand[j]
            for i in range(j):
                ci = cand[i]
                w = start[i]
                for h in range(i):
                    if ways[h][i] and full[cand[h], ci, cj] > 0:
                        w += ways[h][i]
                ways[i][j] = w
        for j in range(m):
            cj = cand[j]
            for i in range(j):
                if ways[i][j] and full[cand[i], cj, p] > 0:
                    total += ways[i][j]
    return total


def count_convex_subsets(S: PointSet, *, method: str = "auto") -> int:
    """Number of nonempty subsets of S in convex position."""
    t = _gp_table(S)
    if S.n == 0:
        return 0
    if method == "auto":
        method = "planar_dp" if S.dim == 2 else "search"
    if method == "planar_dp":
        if S.dim != 2:
            raise ValueError("planar_dp needs d = 2")
        return _count_convex_planar(t)
    if method == "search":
        counter = [0]

        def visit(idx, cov):
            counter[0] += 1
        _grow_hereditary(t, "convex", S.n, visit)
        return counter[0]
    raise ValueError(f"unknown method {method!r}")


def count_all_islands(S: PointSet, method: str = "direct", *, cap: int = DEFAULT_ALL_ISLANDS_CAP) -> CountResult:
    """Number of nonempty islands of S.

    ``direct`` tests every nonempty subset; ``convex_bijection`` counts
    nonempty convex-position subsets, which are in bijection with islands
    via G -> conv(G) cap S.
    """
    if S.n > cap:
        raise CapExceededError(f"n={S.n} exceeds the all-islands cap {cap}; raise it with cap=")
    if S.n == 0:
        return CountResult(0, 0, None, "island")
    t = _gp_table(S)
    if method == "direct":
        value = _count_all_direct(t)
    elif method == "convex_bijection":
        value = count_convex_subsets(S)
    else:
        raise ValueError(f"unknown method {method!r}")
    return CountResult(value, S.n, None, "island")


def iter_k_holes(S: PointSet, k: int):
    """Yield the index tuples of all k-holes in lexicographic order."""
    t = _gp_table(S)
    found = []

    def visit(idx, cov):
        if len(idx) == k:
            found.append(idx)

    _grow_hereditary(t, "hole", k, visit)
    return iter(sorted(found))
