"""
Canonical ordering
==================

The ordering starts from a largest-volume simplex, then places the points
inside it, then the outside points nearest to the growing hull.
"""

from itertools import permutations

from kislands import (PointSet, canonical_ordering, check_box_containment, check_canonical_conditions,
                      delta_star_contains_all, sample_set)

Q = PointSet.from_coords([(0, 3), (4, 0), (0, 0), (1, 1)])
rep = canonical_ordering(Q)
print(rep.to_dict())

# swapping the first two points breaks the longest-edge rule
p = rep.permutation[:]
p[0], p[1] = p[1], p[0]
print(check_canonical_conditions(Q, p).first_violation)

Q = sample_set("simplex", 6, seed=11, dim=2)
rep = canonical_ordering(Q)
passing = [list(p) for p in permutations(range(Q.n)) if check_canonical_conditions(Q, p, stop_early=True).passed]
print("orderings passing all conditions:", passing, "canonical:", rep.permutation)
print("delta star holds every point:", delta_star_contains_all(Q, rep.permutation))
print("box containment:", check_box_containment(Q, rep.permutation, unit_volume_context=True))
