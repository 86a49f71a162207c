"""Immutable point sets, the text/JSON formats, and position validators."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .exact_geom import Point, affine_rank, det, orientation


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class PointSet:
    """An ordered, duplicate-free list of rational points in R^dim."""

    dim: int
    points: tuple
    label: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dimension must be positive")
        pts = tuple(tuple(Fraction(c) for c in p) for p in self.points)
        for p in pts:
            if len(p) != self.dim:
                raise ValueError(f"point {p} does not have dimension {self.dim}")
        if len(set(pts)) != len(pts):
            raise ValueError("duplicate points")
        object.__setattr__(self, "points", pts)

    @classmethod
    def from_coords(cls, coords: Iterable[Sequence], label: str | None = None) -> "PointSet":
        pts = [tuple(Fraction(c) for c in p) for p in coords]
        if not pts:
            raise ValueError("cannot infer dimension of an empty point list")
        return cls(len(pts[0]), tuple(pts), label)

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, i):
        return self.points[i]

    @property
    def n(self) -> int:
        return len(self.points)

    def subset(self, indices: Iterable[int]) -> list[Point]:
        return [self.points[i] for i in indices]

    def take(self, indices: Iterable[int], label: str | None = None) -> "PointSet":
        return PointSet(self.dim, tuple(self.points[i] for i in indices), label)

    def project(self) -> "PointSet":
        """Drop the last coordinate."""
        if self.dim < 2:
            raise ValueError("cannot project a 1-dimensional set")
        return PointSet(self.dim - 1, tuple(p[:-1] for p in self.points), self.label)

    @cached_property
    def scale(self) -> int:
        """Common denominator of all coordinates."""
        return math.lcm(*(c.denominator for p in self.points for c in p)) if self.points else 1

    @cached_property
    def int_coords(self) -> tuple:
        """Coordinates multiplied by :attr:`scale`; all orientation signs are preserved."""
        s = self.scale
        return tuple(tuple(c.numerator * (s // c.denominator) for c in p) for p in self.points)


def _parse_rational(tok: str, lineno: int) -> Fraction:
    try:
        if "/" in tok:
            num, den = tok.split("/")
            if int(den) == 0:
                raise ParseError(f"zero denominator in {tok!r}", lineno)
            return Fraction(int(num), int(den))
        if any(ch in tok for ch in ".eE") and not tok.lstrip("+-").isdigit():
            return Fraction(float(tok))
        return Fraction(int(tok))
    except ParseError:
        raise
    except (ValueError, OverflowError):
        raise ParseError(f"bad rational {tok!r}", lineno) from None


def parse_pointset(text: str | bytes) -> PointSet:
    """Read the plain-text format.

    Line 1 is ``"<d> <n>"``; then ``n`` lines of ``d`` rationals written as
    ``a``, ``-a``, ``a/b`` or a decimal literal.  Decimal literals are read
    as IEEE doubles and converted exactly.  Lines starting with ``#`` are
    comments; a leading ``# label: ...`` comment sets the label.
    """
    if isinstance(text, bytes):
        text = text.decode()
    label = None
    header = None
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if header is None and body.startswith("label:"):
                label = body[len("label:"):].strip()
            continue
        toks = line.split()
        if header is None:
            if len(toks) != 2 or not all(t.isdigit() for t in toks):
                raise ParseError("header must be '<d> <n>'", lineno)
            header = (int(toks[0]), int(toks[1]))
            if header[0] < 1:
                raise ParseError("dimension must be positive", lineno)
            continue
        d = header[0]
        if len(toks) != d:
            raise ParseError(f"expected {d} coordinates, got {len(toks)}", lineno)
        if len(rows) >= header[1]:
            raise ParseError(f"more than {header[1]} points", lineno)
        rows.append(tuple(_parse_rational(t, lineno) for t in toks))
    if header is None:
        raise ParseError("missing header", 1)
    if len(rows) != header[1]:
        raise ParseError(f"expected {header[1]} points, got {len(rows)}")
    try:
        return PointSet(header[0], tuple(rows), label)
    except ValueError as e:
        raise ParseError(str(e)) from None


def serialize_pointset(S: PointSet) -> str:
    lines = []
    if S.label:
        lines.append(f"# label: {S.label}")
    lines.append(f"{S.dim} {S.n}")
    for p in S.points:
        lines.append(" ".join(str(c) for c in p))
    return "\n".join(lines) + "\n"


def pointset_to_json(S: PointSet) -> str:
    doc = {"dim": S.dim, "points": [[str(c) for c in p] for p in S.points]}
    if S.label:
        doc["label"] = S.label
    return json.dumps(doc)


def pointset_from_json(text: str | bytes) -> PointSet:
    doc = json.loads(text)
    try:
        pts = tuple(tuple(_parse_rational(str(c), i + 1) for c in p) for i, p in enumerate(doc["points"]))
        return PointSet(int(doc["dim"]), pts, doc.get("label"))
    except (KeyError, TypeError) as e:
        raise ParseError(f"malformed JSON point set: {e}") from None


def is_general_position(S: PointSet) -> bool:
    """No k+2 points on a common affine k-flat, for every k < d.

    It suffices that every subset of at most d+1 points is affinely
    independent, which reduces to nonzero orientation of all (d+1)-subsets
    when n > d.
    """
    from .enumeration import orientation_table  # local import: shared cache

    d, n = S.dim, S.n
    if n <= d + 1:
        return affine_rank(list(S.points)) == n - 1
    return not orientation_table(S).has_zero


def _trailing_axes_degenerate(tuple_pts, i: int) -> bool:
    # the i-flat through i+1 points meets span(e_{i+1..d}) nontrivially iff the
    # first i coordinates of the edge vectors are linearly dependent
    p0 = tuple_pts[0]
    return det([[p[c] - p0[c] for c in range(i)] for p in tuple_pts[1:]]) == 0


def is_strongly_general_position(S: PointSet) -> bool:
    """General position, and for i = 1..d-1 no (i+1) points span an i-flat
    parallel to the subspace spanned by the last d-i axes."""
    if not is_general_position(S):
        return False
    pts = S.int_coords
    for i in range(1, S.dim):
        if i == 1:
            firsts = [p[0] for p in pts]
            if len(set(firsts)) != len(firsts):
                return False
            continue
        for T in combinations(pts, i + 1):
            if _trailing_axes_degenerate(T, i):
                return False
    return True


def sgp_witness(S: PointSet):
    """First index tuple violating strong general position, or ``None``."""
    d = S.dim
    pts = S.int_coords
    n = len(pts)
    for T in combinations(range(n), min(d + 1, n)):
        if len(T) == d + 1 and orientation([pts[t] for t in T]) == 0:
            return ("general_position", T)
    if n <= d and affine_rank(list(S.points)) != n - 1:
        return ("general_position", tuple(range(n)))
    for i in range(1, d):
        for T in combinations(range(n), i + 1):
            if _trailing_axes_degenerate([pts[t] for t in T], i):
                return (f"parallel_{i}", T)
    return None
