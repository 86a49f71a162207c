"""The canonical (k, a)-ordering of a k-point set and its certified properties.

Given Q in general position with |Q| = k >= d+1, the ordering is built as:

1. Δ: the (d+1)-subset spanning the simplex of largest volume.
2. q1 q2: the longest edge of Δ, with q1 lexicographically smaller.
3. q3 .. q(d+1): repeatedly the remaining vertex of Δ farthest from the
   affine hull of the vertices chosen so far.
4. the a points strictly inside Δ, in lexicographic order.
5. the points outside Δ, each time the one closest to the convex hull of
   everything placed before it.

Every tie is broken towards the lexicographically smallest candidate, so
the ordering is unique.  All comparisons are exact (volumes, squared
distances).  Positions in reports are indices into Q.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .exact_geom import (
    DegenerateError,
    orientation,
    orientation_det,
    simplex_volume,
    squared_distance_to_affine_hull,
    squared_distance_to_convex_hull,
)
from .pointset import PointSet, is_general_position

CONDITIONS = ("L1", "L2", "L3", "L4", "L5")


@dataclass
class OrderingReport:
    permutation: list[int]
    a: int
    condition_flags: dict
    delta_volume: Fraction
    points: list = field(default_factory=list, repr=False)

    def to_dict(self) -> dict:
        return {
            "permutation": self.permutation,
            "a": self.a,
            "condition_flags": self.condition_flags,
            "delta_volume": str(self.delta_volume),
        }


@dataclass
class ConditionReport:
    flags: dict
    witnesses: dict

    @property
    def passed(self) -> bool:
        return all(self.flags.values())

    @property
    def first_violation(self):
        for c in CONDITIONS:
            if not self.flags[c]:
                return c, self.witnesses[c]
        return None


class _Context:
    """Memoised exact quantities for one point set."""

    def __init__(self, Q):
        if isinstance(Q, PointSet):
            self.pts = list(Q.points)
            self.d = Q.dim
        else:
            self.pts = [tuple(Fraction(c) for c in p) for p in Q]
            self.d = len(self.pts[0])
        self.k = len(self.pts)
        self._vol = {}
        self._aff = {}
        self._hull = {}
        self._inside = {}
        self._delta = None

    def vol(self, T) -> Fraction:
        key = frozenset(T)
        v = self._vol.get(key)
        if v is None:
            v = self._vol[key] = simplex_volume([self.pts[i] for i in sorted(key)])
        return v

    def sqlen(self, i, j) -> Fraction:
        return sum((a - b) ** 2 for a, b in zip(self.pts[i], self.pts[j]))

    def aff(self, q, A) -> Fraction:
        key = (q, tuple(A))
        v = self._aff.get(key)
        if v is None:
            v = self._aff[key] = squared_distance_to_affine_hull(self.pts[q], [self.pts[i] for i in A])
        return v

    def hull(self, q, P) -> Fraction:
        key = (q, frozenset(P))
        v = self._hull.get(key)
        if v is None:
            v = self._hull[key] = squared_distance_to_convex_hull(self.pts[q], [self.pts[i] for i in sorted(key[1])])
        return v

    def strictly_inside(self, p, T) -> bool:
        key = (p, frozenset(T))
        v = self._inside.get(key)
        if v is None:
            simplex = [self.pts[i] for i in sorted(key[1])]
            s = orientation(simplex)
            v = s != 0 and all(
                orientation(simplex[:j] + [self.pts[p]] + simplex[j + 1:]) == s for j in range(self.d + 1)
            )
            self._inside[key] = v
        return v

    def lex(self, i):
        return self.pts[i]

    def max_simplex(self):
        """The tie-broken maximum-volume (d+1)-subset, as a sorted index tuple."""
        if self._delta is None:
            best = None
            for T in combinations(range(self.k), self.d + 1):
                key = (-self.vol(T), sorted(self.pts[i] for i in T))
                if best is None or key < best[0]:
                    best = (key, T)
            self._delta = best[1]
        return self._delta


def _validate(Q, ctx: _Context):
    if ctx.k <= ctx.d:
        raise ValueError(f"need at least d+1 = {ctx.d + 1} points, got {ctx.k}")
    S = Q if isinstance(Q, PointSet) else PointSet(ctx.d, tuple(ctx.pts))
    if not is_general_position(S):
        raise DegenerateError("Q is not in general position")


def _longest_edge(ctx: _Context, D) -> tuple[int, int]:
    best = None
    for i, j in combinations(D, 2):
        a, b = sorted((i, j), key=ctx.lex)
        key = (-ctx.sqlen(a, b), ctx.pts[a], ctx.pts[b])
        if best is None or key < best[0]:
            best = (key, (a, b))
    return best[1]


def _prefix_from_simplex(ctx: _Context, D) -> list[int]:
    q1, q2 = _longest_edge(ctx, D)
    order = [q1, q2]
    rest = [i for i in D if i not in order]
    while rest:
        nxt = min(rest, key=lambda i: (-ctx.aff(i, order), ctx.pts[i]))
        order.append(nxt)
        rest.remove(nxt)
    return order


def _complete(ctx: _Context, prefix: list[int]) -> tuple[list[int], int]:
    D = prefix[: ctx.d + 1]
    others = [i for i in range(ctx.k) if i not in D]
    inner = sorted((i for i in others if ctx.strictly_inside(i, D)), key=ctx.lex)
    outer = [i for i in others if i not in inner]
    order = list(prefix) + inner
    while outer:
        nxt = min(outer, key=lambda i: (ctx.hull(i, order), ctx.pts[i]))
        order.append(nxt)
        outer.remove(nxt)
    return order, len(inner)


def canonical_ordering(Q) -> OrderingReport:
    """Compute the canonical (k, a)-ordering of ``Q``."""
    ctx = _Context(Q)
    _validate(Q, ctx)
    prefix = _prefix_from_simplex(ctx, ctx.max_simplex())
    perm, a = _complete(ctx, prefix)
    flags = _evaluate(ctx, perm).flags
    return OrderingReport(perm, a, flags, ctx.vol(perm[: ctx.d + 1]), [ctx.pts[i] for i in perm])


def _evaluate(ctx: _Context, perm, stop_early: bool = False) -> ConditionReport:
    d, k = ctx.d, ctx.k
    q = list(perm)
    D = q[: d + 1]
    flags = {}
    wit = {}

    def done(name, ok, witness=None):
        flags[name] = ok
        wit[name] = None if ok else witness
        return stop_early and not ok

    # L1: largest simplex (ties: lexicographically smallest vertex list)
    best = ctx.max_simplex()
    ok = set(best) == set(D)
    if done("L1", ok, {"larger_simplex": list(best), "volume": str(ctx.vol(best)), "delta_volume": str(ctx.vol(D))}):
        return _fill(flags, wit)

    # L2: q1 q2 is the longest edge of Δ with q1 <lex q2; each next vertex
    # is the farthest remaining one from the affine hull of its predecessors
    l2 = None
    if not ctx.pts[q[0]] < ctx.pts[q[1]]:
        l2 = {"clause": "q1 not lexicographically smaller than q2", "indices": [q[0], q[1]]}
    else:
        e = _longest_edge(ctx, D)
        if e != (q[0], q[1]):
            l2 = {"clause": "q1q2 is not the longest edge of the simplex", "longest": list(e)}
    if l2 is None:
        for i in range(2, d):
            head = q[:i]
            cand = q[i:d]
            top = min(cand, key=lambda c: (-ctx.aff(c, head), ctx.pts[c]))
            if top != q[i]:
                l2 = {"clause": f"q{i + 1} is not the farthest point from aff(q1..q{i})", "farther": top}
                break
    if done("L2", l2 is None, l2):
        return _fill(flags, wit)

    # L3: q(d+1) is no farther than q(i+1) from aff(q1..qi), and no vertex
    # pair involving q(d+1) is longer than q1q2
    l3 = None
    last = q[d]
    for i in range(1, d):
        head = q[:i]
        hi, hl = ctx.aff(q[i], head), ctx.aff(last, head)
        if hl > hi or (hl == hi and ctx.pts[last] < ctx.pts[q[i]]):
            l3 = {"clause": f"q{d + 1} beats q{i + 1} in distance to aff(q1..q{i})", "indices": [last, q[i]]}
            break
    if l3 is None:
        edge = ctx.sqlen(q[0], q[1])
        for i in range(d):
            if ctx.sqlen(last, q[i]) > edge:
                l3 = {"clause": f"|q{d + 1} q{i + 1}| exceeds |q1 q2|", "indices": [last, q[i]]}
                break
    if done("L3", l3 is None, l3):
        return _fill(flags, wit)

    # L4: the next a points are the points strictly inside Δ, sorted
    inside = [i for i in range(k) if i not in D and ctx.strictly_inside(i, D)]
    a = len(inside)
    block = q[d + 1: d + 1 + a]
    l4 = None
    if sorted(block) != sorted(inside):
        stray = [i for i in block if i not in inside] or [i for i in inside if i not in block]
        l4 = {"clause": "points inside the simplex are not placed right after it", "indices": stray}
    elif block != sorted(block, key=ctx.lex):
        l4 = {"clause": "inside points are not in lexicographic order", "indices": block}
    if done("L4", l4 is None, l4):
        return _fill(flags, wit)

    # L5: remaining points are outside Δ, each closest to the hull of its predecessors
    l5 = None
    tail = q[d + 1 + a:]
    for pos, i in enumerate(tail):
        if ctx.strictly_inside(i, D):
            l5 = {"clause": "point after the inside block lies inside the simplex", "indices": [i]}
            break
    if l5 is None:
        for pos in range(len(tail)):
            prefix = q[: d + 1 + a + pos]
            rest = tail[pos:]
            top = min(rest, key=lambda c: (ctx.hull(c, prefix), ctx.pts[c]))
            if top != tail[pos]:
                l5 = {"clause": "a later point is closer to the hull of the prefix", "indices": [tail[pos], top]}
                break
    done("L5", l5 is None, l5)
    return _fill(flags, wit)


def _fill(flags, wit) -> ConditionReport:
    for c in CONDITIONS:
        flags.setdefault(c, False)
        wit.setdefault(c, {"clause": "not evaluated"} if not flags[c] else None)
    return ConditionReport(flags, wit)


def _check_perm(perm, k):
    perm = [int(i) for i in perm]
    if sorted(perm) != list(range(k)):
        raise ValueError(f"not a permutation of 0..{k - 1}: {perm}")
    return perm


def check_canonical_conditions(Q, permutation: Sequence[int], *, _ctx: _Context | None = None,
                               stop_early: bool = False) -> ConditionReport:
    """Evaluate the five conditions for ``permutation`` and report witnesses.

    Each condition is judged on its own against the simplex spanned by the
    first d+1 points of the permutation.
    """
    ctx = _ctx or _Context(Q)
    perm = _check_perm(permutation, ctx.k)
    if ctx.k <= ctx.d:
        raise ValueError("need at least d+1 points")
    return _evaluate(ctx, perm, stop_early)


def passing_orderings(Q, perms) -> list[list[int]]:
    """All orderings among ``perms`` that satisfy every condition (shares one cache)."""
    ctx = _Context(Q)
    return [list(p) for p in perms if _evaluate(ctx, list(p), stop_early=True).passed]


def delta_star_contains_all(Q, permutation: Sequence[int], *, require_l1: bool = True) -> bool:
    """Do all points lie in the simplex bounded by the hyperplanes through each
    vertex of Δ parallel to the opposite facet?

    In barycentric coordinates relative to Δ that region is ``λ_j <= 1`` for
    every j.  Only guaranteed when Δ has maximum volume, so the call refuses
    orderings violating L1 unless ``require_l1=False``.
    """
    ctx = _Context(Q)
    perm = _check_perm(permutation, ctx.k)
    D = perm[: ctx.d + 1]
    if require_l1 and set(D) != set(ctx.max_simplex()):
        raise ValueError("the first d+1 points do not span a maximum-volume simplex")
    return delta_star_witness(ctx, D) is None


def delta_star_witness(ctx_or_Q, D):
    ctx = ctx_or_Q if isinstance(ctx_or_Q, _Context) else _Context(ctx_or_Q)
    simplex = [ctx.pts[i] for i in D]
    base = orientation_det(simplex)
    if base == 0:
        raise DegenerateError("Δ is degenerate")
    for p in range(ctx.k):
        for j in range(ctx.d + 1):
            v = orientation_det(simplex[:j] + [ctx.pts[p]] + simplex[j + 1:])
            # λ_j(p) = v / base must not exceed 1
            if (v - base) * (1 if base > 0 else -1) > 0:
                return {"point": p, "facet_opposite": D[j]}
    return None


def check_box_containment(Q, permutation: Sequence[int], unit_volume_context: bool = False) -> bool:
    """Coordinate-free form of the box containment for q(d+1).

    (a) q(d+1) projects onto the q1->q2 ray side (x1 >= 0), is no farther
    from aff(q1..qi) than q(i+1) for i = 1..d-1, and is within |q1 q2| of
    every other vertex; (b) with ``unit_volume_context`` also vol(Δ) <= 1.
    """
    ctx = _Context(Q)
    perm = _check_perm(permutation, ctx.k)
    d = ctx.d
    q = perm
    last = q[d]
    p1, p2, pl = ctx.pts[q[0]], ctx.pts[q[1]], ctx.pts[last]
    if sum((a - b) * (c - b) for a, c, b in zip(pl, p2, p1)) < 0:
        return False
    for i in range(1, d):
        if ctx.aff(last, q[:i]) > ctx.aff(q[i], q[:i]):
            return False
    edge = ctx.sqlen(q[0], q[1])
    if any(ctx.sqlen(last, q[i]) > edge for i in range(d)):
        return False
    if unit_volume_context and ctx.vol(q[: d + 1]) > 1:
        return False
    return True
