"""
Monte Carlo and growth experiments
==================================

Means of exact counts over seeded trials are compared with the bounds;
growth fits use least squares on transformed counts.
"""

from kislands import growth_experiment, monte_carlo
from kislands.experiments import estimate_csv, growth_csv

r = monte_carlo("cube", 2, 3, 20, 50, seed=1)
print(estimate_csv([r]))
print("per-trial counts:", r.counts[:10], "...")

g = growth_experiment("horton", 2, 4, [8, 16, 32])
print(growth_csv(g))

g = growth_experiment("cube", 2, "all", [6, 9, 12, 15], trials=10, seed=2)
print(f"log2(islands) ~ {g.fitted_slope:.2f} n^(1/3) + {g.intercept:.2f}, R^2 = {g.r_squared:.4f}")
