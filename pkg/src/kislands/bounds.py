"""Closed-form bounds on island and hole counts, evaluated exactly."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial


@dataclass(frozen=True)
class BoundValue:
    value: Fraction
    formula_id: str
    d: int
    k: int | None
    n: int

    def __float__(self):
        return float(self.value)


def _falling(n: int, terms: int) -> int:
    """n (n-1) ... (n-terms+1), exactly ``terms`` factors."""
    out = 1
    for i in range(terms):
        out *= n - i
    return out


def _check(d, k, n):
    if d < 2:
        raise ValueError(f"need d >= 2, got d={d}")
    if k < d + 1:
        raise ValueError(f"need k >= d+1, got k={k}, d={d}")
    if n < k:
        raise ValueError(f"need n >= k, got n={n}, k={k}")


def _facet_factor(d: int, k: int) -> int:
    return 2 * d ** (2 * d - 1) * comb(k, d // 2)


def bound_theorem1(d: int, k: int, n: int) -> BoundValue:
    """Upper bound on the expected number of k-islands among n uniform points.

    2^(d-1) (2 d^(2d-1) C(k, floor(d/2)))^(k-d-1) (k-d) n(n-1)...(n-k+2) / (n-k+1)^(k-d-1)
    """
    _check(d, k, n)
    e = k - d - 1
    value = Fraction(2 ** (d - 1) * _facet_factor(d, k) ** e * (k - d) * _falling(n, k - 1), (n - k + 1) ** e)
    return BoundValue(value, "theorem1", d, k, n)


def bound_theorem2(d: int, k: int, n: int) -> BoundValue:
    """Upper bound on the expected number of k-holes among n uniform points.

    2^(d-1) (2 d^(2d-1) C(k, floor(d/2)))^(k-d-1) n(n-1)...(n-k+2) / ((k-d-1)! (n-k+1)^(k-d-1))
    """
    _check(d, k, n)
    e = k - d - 1
    value = Fraction(2 ** (d - 1) * _facet_factor(d, k) ** e * _falling(n, k - 1), factorial(e) * (n - k + 1) ** e)
    return BoundValue(value, "theorem2", d, k, n)


def bound_corollary3(d: int, n: int) -> BoundValue:
    """Expected number of empty simplices is at most 2^(d-1) d! C(n, d)."""
    if d < 2:
        raise ValueError(f"need d >= 2, got d={d}")
    if n < d + 1:
        raise ValueError(f"need n >= d+1, got n={n}")
    return BoundValue(Fraction(2 ** (d - 1) * factorial(d) * comb(n, d)), "corollary3", d, d + 1, n)


def bound_planar4_improved(n: int) -> BoundValue:
    """Sharper planar 4-hole bound 12 n(n-1)(n-2)/(n-3)."""
    if n < 4:
        raise ValueError(f"need n >= 4, got n={n}")
    return BoundValue(Fraction(12 * _falling(n, 3), n - 3), "planar4_improved", 2, 4, n)


def lower_bound_empty_simplices(d: int, n: int) -> BoundValue:
    """Every n-point set in general position has at least C(n-1, d) empty simplices."""
    if n < d + 1:
        raise ValueError(f"need n >= d+1, got n={n}")
    return BoundValue(Fraction(comb(n - 1, d)), "lower_empty_simplices", d, d + 1, n)


def lower_bound_islands(d: int, k: int, n: int) -> BoundValue:
    """Every n-point set in general position has at least C(n, d)/C(k, d) k-islands (d <= k <= n)."""
    if not d <= k <= n:
        raise ValueError(f"need d <= k <= n, got d={d}, k={k}, n={n}")
    return BoundValue(Fraction(comb(n, d), comb(k, d)), "lower_islands", d, k, n)


def applicable_bounds(d: int, k: int, n: int) -> dict[str, BoundValue]:
    """All bounds whose preconditions hold for ``(d, k, n)``, keyed by formula id."""
    out = {}
    if d >= 2 and k >= d + 1 and n >= k:
        out["theorem1"] = bound_theorem1(d, k, n)
        out["theorem2"] = bound_theorem2(d, k, n)
    if d >= 2 and k == d + 1 and n >= d + 1:
        out["corollary3"] = bound_corollary3(d, n)
        out["lower_empty_simplices"] = lower_bound_empty_simplices(d, n)
    if d == 2 and k == 4 and n >= 4:
        out["planar4_improved"] = bound_planar4_improved(n)
    if d <= k <= n:
        out["lower_islands"] = lower_bound_islands(d, k, n)
    return out
