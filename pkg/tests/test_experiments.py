from fractions import Fraction as F
from math import comb

import pytest

from kislands import monte_carlo, growth_experiment
from kislands.enumeration import CapExceededError
from kislands.experiments import (ESTIMATE_COLUMNS, EstimateReport, estimate_csv, fit_line, fmt_decimal,
                                  growth_csv)


def test_fmt_decimal():
    assert fmt_decimal(F(1, 3)) == "0.333333"
    assert fmt_decimal(F(-5, 2), 0) == "-2"
    assert fmt_decimal(1740) == "1740.000000"
    assert fmt_decimal(None) == ""


def test_trivial_island_counts():
    r = monte_carlo("cube", 2, 2, 10, 5, 3, "island")
    assert set(r.counts) == {45}
    assert r.stderr == 0 and r.passed


def test_empty_triangles_small():
    r = monte_carlo("cube", 2, 3, 12, 10, 1)
    assert all(c >= comb(11, 2) for c in r.counts)
    assert r.lower_bound == 55 and r.lower_ok
    assert r.min <= r.mean <= r.max
    assert r.bound_values["corollary3"] == 4 * comb(12, 2)
    assert r.passed


def test_determinism_and_threads():
    a = monte_carlo("simplex", 2, 4, 10, 4, 99)
    b = monte_carlo("simplex", 2, 4, 10, 4, 99)
    c = monte_carlo("simplex", 2, 4, 10, 4, 99, threads=2)
    assert a == b == c
    assert estimate_csv([a]) == estimate_csv([c])


def test_hole_le_island_per_trial():
    h = monte_carlo("cube", 3, 5, 10, 4, 5, "hole")
    i = monte_carlo("cube", 3, 5, 10, 4, 5, "island")
    assert all(x <= y for x, y in zip(h.counts, i.counts))


def test_flags_follow_counts():
    r = EstimateReport("cube", 2, 3, 5, 2, 0, "hole", (100, 100), {"corollary3": F(40)}, F(6))
    assert not r.upper_ok and not r.passed
    r = EstimateReport("cube", 2, 3, 5, 2, 0, "hole", (1, 1), {"corollary3": F(40)}, F(6))
    assert r.upper_ok and not r.lower_ok
    with pytest.raises(ValueError):
        EstimateReport("cube", 2, 3, 5, 0, 0, "hole", ())


def test_csv_columns():
    text = estimate_csv([monte_carlo("cube", 2, 4, 8, 2, 0)])
    header, row = text.strip().split("\n")
    assert header == ",".join(ESTIMATE_COLUMNS)
    vals = dict(zip(ESTIMATE_COLUMNS, row.split(",")))
    assert vals["bound_c3"] == "" and vals["lower_bound"] == ""
    assert vals["pass"] in ("true", "false")


def test_errors():
    with pytest.raises(ValueError):
        monte_carlo("cube", 2, 3, 10, 0, 1)
    with pytest.raises(ValueError):
        monte_carlo("cube", 2, 3, 10, 2, 1, "convex")
    with pytest.raises(CapExceededError, match="smaller n"):
        monte_carlo("cube", 2, 3, 200, 1, 1)
    with pytest.raises(CapExceededError):
        growth_experiment("cube", 2, "all", [10, 25], 1, 0)
    with pytest.raises(ValueError):
        growth_experiment("horton", 2, "all", [8, 16])
    with pytest.raises(ValueError):
        growth_experiment("horton", 2, 4, [16, 8])


def test_growth_single_size():
    g = growth_experiment("horton", 2, 4, [16])
    assert g.counts == (429,) and g.fitted_slope is None and g.r_squared is None


def test_growth_random_all():
    g = growth_experiment("cube", 2, "all", [6, 9, 12], 3, 4)
    assert g.transform == "log2_vs_pow"
    assert g.x[0] == pytest.approx(6 ** (1 / 3))
    assert g.fitted_slope > 0
    assert growth_csv(g) == growth_csv(growth_experiment("cube", 2, "all", [6, 9, 12], 3, 4))


def test_fit_line():
    s, i, r2, res = fit_line([0, 1, 2], [1, 3, 5])
    assert s == pytest.approx(2) and i == pytest.approx(1) and r2 == pytest.approx(1)
    assert max(abs(x) for x in res) < 1e-12
