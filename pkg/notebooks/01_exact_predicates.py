"""
Exact predicates
================

Orientation signs, simplex volumes and distances are computed on rationals,
so every comparison below is decided without rounding.
"""

from fractions import Fraction

from kislands import (orientation, point_in_hull, simplex_volume, squared_distance_to_affine_hull,
                      squared_distance_to_convex_hull)

tri = [(0, 0), (1, 0), (0, 1)]
print("orientation of the unit triangle:", orientation(tri))
print("reversed:", orientation(tri[::-1]))
print("area:", simplex_volume(tri))

# a point a hair off the diagonal is still classified correctly
eps = Fraction(1, 10 ** 30)
for q in [(Fraction(1, 4), Fraction(1, 4)), (Fraction(1, 2), Fraction(1, 2)), (Fraction(1, 2) + eps, Fraction(1, 2))]:
    print(q, point_in_hull(q, tri))

###############################################################################
# Squared distances stay rational.

print(squared_distance_to_affine_hull((1, 1, 1), [(0, 0, 0)]))
print(squared_distance_to_convex_hull((2, 2), [(0, 0), (1, 0)]))
