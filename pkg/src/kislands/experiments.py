"""Monte Carlo estimates of hole/island counts and growth-law fits.

Trial t of an experiment with seed s samples its point set with seed
``derive_seed(s, t)``; results are collected in trial order, so reports do
not depend on the number of worker processes.
"""

from __future__ import annotations

import csv
import io
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
from scipy import stats

from .bounds import applicable_bounds
from .enumeration import (DEFAULT_ALL_ISLANDS_CAP, DEFAULT_HOLE_CAP, CapExceededError,
                          count_all_islands, count_k_subsets)
from .horton import horton_d
from .sampler import ConvexBody, derive_seed, sample_set

ESTIMATE_COLUMNS = ("body", "d", "k", "n", "trials", "seed", "kind", "mean", "stderr", "min", "max",
                    "bound_t1", "bound_t2", "bound_c3", "lower_bound", "pass")
GROWTH_COLUMNS = ("source", "d", "k", "n", "trials", "seed", "count", "x", "y",
                  "slope", "intercept", "r_squared", "transform")
UPPER_IDS = {"hole": ("theorem1", "theorem2", "corollary3", "planar4_improved"), "island": ("theorem1",)}
STDERR_FACTOR = 4
DECIMALS = 6


def fmt_decimal(x, places: int = DECIMALS) -> str:
    """Fixed-point string, rounded half to even; exact for Fractions."""
    if x is None:
        return ""
    q = Fraction(x) * 10 ** places
    r = round(q)
    sign = "-" if r < 0 else ""
    r = abs(r)
    whole, frac = divmod(r, 10 ** places)
    return f"{sign}{whole}.{frac:0{places}d}" if places else f"{sign}{whole}"


def _pool_map(fn, args, threads):
    if threads is None or threads <= 1 or len(args) <= 1:
        return [fn(*a) for a in args]
    with ProcessPoolExecutor(max_workers=threads) as ex:
        return list(ex.map(fn, *zip(*args)))


def _body(body, d):
    if isinstance(body, ConvexBody):
        if body.dim != d:
            raise ValueError(f"body dimension {body.dim} differs from d={d}")
        return body
    return ConvexBody(body, d)


# -- estimates


@dataclass(frozen=True)
class EstimateReport:
    body: str
    d: int
    k: int
    n: int
    trials: int
    seed: int
    kind: str
    counts: tuple
    bound_values: dict = field(default_factory=dict)
    lower_bound: Fraction | None = None

    def __post_init__(self):
        if self.trials < 1 or len(self.counts) != self.trials:
            raise ValueError("need one count per trial and at least one trial")

    @property
    def mean(self) -> Fraction:
        return Fraction(sum(self.counts), self.trials)

    @property
    def variance(self) -> Fraction:
        if self.trials < 2:
            return Fraction(0)
        m = self.mean
        return sum((c - m) ** 2 for c in self.counts) / (self.trials - 1)

    @property
    def stderr(self) -> float:
        return math.sqrt(self.variance / self.trials)

    @property
    def min(self) -> int:
        return min(self.counts)

    @property
    def max(self) -> int:
        return max(self.counts)

    @property
    def upper_bounds(self) -> dict:
        return {i: v for i, v in self.bound_values.items() if i in UPPER_IDS[self.kind]}

    @property
    def upper_ok(self) -> bool:
        top = float(self.mean) + STDERR_FACTOR * self.stderr
        return all(top <= float(v) for v in self.upper_bounds.values())

    @property
    def lower_ok(self) -> bool:
        return self.lower_bound is None or self.mean >= self.lower_bound

    @property
    def passed(self) -> bool:
        return self.upper_ok and self.lower_ok

    def row(self) -> dict:
        b = self.bound_values
        return {
            "body": self.body, "d": self.d, "k": self.k, "n": self.n, "trials": self.trials,
            "seed": self.seed, "kind": self.kind,
            "mean": fmt_decimal(self.mean), "stderr": f"{self.stderr:.{DECIMALS}f}",
            "min": self.min, "max": self.max,
            "bound_t1": fmt_decimal(b.get("theorem1")), "bound_t2": fmt_decimal(b.get("theorem2")),
            "bound_c3": fmt_decimal(b.get("corollary3")), "lower_bound": fmt_decimal(self.lower_bound),
            "pass": "true" if self.passed else "false",
        }

    def to_dict(self) -> dict:
        out = self.row()
        out["pass"] = self.passed
        out["counts"] = list(self.counts)
        out["bounds"] = {i: str(v) for i, v in self.bound_values.items()}
        out["upper_ok"] = self.upper_ok
        out["lower_ok"] = self.lower_ok
        return out


def _trial_count(kind_body, d, n, seed, k, kind):
    S = sample_set(kind_body, n, seed, dim=d)
    return count_k_subsets(S, k, kind).value


def _bounds_for(d, k, n, kind):
    found = applicable_bounds(d, k, n)
    upper = {i: v.value for i, v in found.items() if i in UPPER_IDS[kind]}
    lower = None
    if kind == "hole" and "lower_empty_simplices" in found:
        lower = found["lower_empty_simplices"].value
    elif kind == "island" and "lower_islands" in found:
        lower = found["lower_islands"].value
    return upper, lower


def monte_carlo(body, d: int, k: int, n: int, trials: int, seed: int, kind: str = "hole", *,
                threads: int = 1, cap: int = DEFAULT_HOLE_CAP) -> EstimateReport:
    """Exact k-hole or k-island counts on ``trials`` sampled sets, with bound comparisons."""
    if kind not in UPPER_IDS:
        raise ValueError(f"kind must be 'hole' or 'island', got {kind!r}")
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if k < 1 or n < 0:
        raise ValueError("need k >= 1 and n >= 0")
    if n > cap:
        raise CapExceededError(f"n={n} exceeds the enumeration cap {cap}; use a smaller n or k, or raise the cap")
    b = _body(body, d)
    args = [(b.kind, d, n, derive_seed(seed, t), k, kind) for t in range(trials)]
    counts = _pool_map(_trial_count, args, threads)
    upper, lower = _bounds_for(d, k, n, kind)
    return EstimateReport(b.kind, d, k, n, trials, seed, kind, tuple(counts), upper, lower)


def estimate_csv(reports) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=ESTIMATE_COLUMNS, lineterminator="\n")
    w.writeheader()
    for r in reports:
        w.writerow(r.row())
    return buf.getvalue()


# -- growth


@dataclass(frozen=True)
class GrowthReport:
    source: str
    d: int
    k: int | None
    sizes: tuple
    counts: tuple
    trials: int
    seed: int
    transform: str
    x: tuple
    y: tuple
    fitted_slope: float | None = None
    intercept: float | None = None
    r_squared: float | None = None
    residuals: tuple = ()

    def __post_init__(self):
        if any(a >= b for a, b in zip(self.sizes, self.sizes[1:])):
            raise ValueError("sizes must be strictly increasing")
        if any(c <= 0 for c in self.counts):
            raise ValueError("counts must be positive")

    def rows(self) -> list[dict]:
        out = []
        for n, c, x, y in zip(self.sizes, self.counts, self.x, self.y):
            out.append({
                "source": self.source, "d": self.d, "k": "all" if self.k is None else self.k, "n": n,
                "trials": self.trials, "seed": self.seed, "count": fmt_decimal(c),
                "x": f"{x:.{DECIMALS}f}", "y": f"{y:.{DECIMALS}f}",
                "slope": "" if self.fitted_slope is None else f"{self.fitted_slope:.{DECIMALS}f}",
                "intercept": "" if self.intercept is None else f"{self.intercept:.{DECIMALS}f}",
                "r_squared": "" if self.r_squared is None else f"{self.r_squared:.{DECIMALS}f}",
                "transform": self.transform,
            })
        return out

    def to_dict(self) -> dict:
        return {
            "source": self.source, "d": self.d, "k": "all" if self.k is None else self.k,
            "sizes": list(self.sizes), "counts": [str(c) for c in self.counts],
            "trials": self.trials, "seed": self.seed, "transform": self.transform,
            "x": list(self.x), "y": list(self.y), "slope": self.fitted_slope,
            "intercept": self.intercept, "r_squared": self.r_squared, "residuals": list(self.residuals),
        }


def growth_csv(report: GrowthReport) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=GROWTH_COLUMNS, lineterminator="\n")
    w.writeheader()
    w.writerows(report.rows())
    return buf.getvalue()


def fit_line(x, y):
    """Least-squares line; returns (slope, intercept, r_squared, residuals)."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if len(x) < 2:
        return None, None, None, ()
    res = stats.linregress(x, y)
    resid = y - (res.slope * x + res.intercept)
    return float(res.slope), float(res.intercept), float(res.rvalue ** 2), tuple(float(r) for r in resid)


def _random_count(kind_body, d, n, seed, k, cap):
    S = sample_set(kind_body, n, seed, dim=d)
    if k is None:
        return count_all_islands(S, "convex_bijection", cap=cap).value
    return count_k_subsets(S, k, "island").value


def _horton_count(d, n, k):
    return count_k_subsets(horton_d(d, n), k, "island").value


def growth_experiment(source, d: int, k, sizes, trials: int = 1, seed: int = 0, *,
                      threads: int = 1, cap: int | None = None) -> GrowthReport:
    """Island counts over increasing sizes with a least-squares growth fit.

    ``source`` is a body name (or ConvexBody) or ``"horton"``.  Random bodies
    with ``k="all"`` fit log2(mean count) against n^((d-1)/(d+1)); everything
    else fits log(count) against log(n).
    """
    sizes = tuple(int(s) for s in sizes)
    if not sizes:
        raise ValueError("need at least one size")
    if k == "all":
        k = None
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if source == "horton":
        if k is None:
            raise ValueError("Horton growth needs a fixed k")
        cap = DEFAULT_HOLE_CAP if cap is None else cap
        if max(sizes) > cap:
            raise CapExceededError(f"size {max(sizes)} exceeds the k-island cap {cap}; raise it with cap=")
        counts = tuple(_pool_map(_horton_count, [(d, n, k) for n in sizes], threads))
        name, trials = "horton", 1
    else:
        b = _body(source, d)
        if cap is None:
            cap = DEFAULT_ALL_ISLANDS_CAP if k is None else DEFAULT_HOLE_CAP
        if max(sizes) > cap:
            raise CapExceededError(f"size {max(sizes)} exceeds the cap {cap}; raise it with cap=")
        args = [(b.kind, d, n, derive_seed(seed, n, t), k, cap) for n in sizes for t in range(trials)]
        flat = _pool_map(_random_count, args, threads)
        counts = tuple(Fraction(sum(flat[i * trials:(i + 1) * trials]), trials) for i in range(len(sizes)))
        name = b.kind
    if k is None and source != "horton":
        transform = "log2_vs_pow"
        x = tuple(n ** ((d - 1) / (d + 1)) for n in sizes)
        y = tuple(math.log2(c) for c in counts)
    else:
        transform = "loglog"
        x = tuple(math.log(n) for n in sizes)
        y = tuple(math.log(c) for c in counts)
    slope, icpt, r2, resid = fit_line(x, y)
    return GrowthReport(name, d, k, sizes, counts, trials, seed, transform, x, y, slope, icpt, r2, resid)
