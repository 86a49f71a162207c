"""
Closed-form bounds
==================

All bounds are exact rationals.
"""

from kislands import applicable_bounds, bound_planar4_improved, bound_theorem2

for fid, b in applicable_bounds(2, 4, 30).items():
    print(f"{fid:22s} {str(b.value):>12s} {float(b.value):12.2f}")

for n in (10, 100, 1000):
    print(n, float(bound_theorem2(2, 4, n).value / n ** 2), float(bound_planar4_improved(n).value / n ** 2))
