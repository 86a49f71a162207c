"""
Counting holes and islands
==========================

A k-island is a k-subset I with conv(I) meeting the set only in I; a
k-hole is an island in convex position.  All islands are also counted a
second way, through convex-position subsets.
"""

from math import comb

from kislands import (count_all_islands, count_k_subsets, hole_profile, largest_hole_size, sample_set)

S = sample_set("cube", 14, seed=3, dim=2)
for k in range(1, 8):
    h = count_k_subsets(S, k, "hole").value
    i = count_k_subsets(S, k, "island").value
    print(f"k={k}: holes={h:5d} islands={i:5d} C(n,k)={comb(S.n, k)}")

print("empty triangles >= C(n-1,2):", count_k_subsets(S, 3, "hole").value, ">=", comb(S.n - 1, 2))
print("hole profile:", hole_profile(S))
print("largest hole:", largest_hole_size(S))

direct = count_all_islands(S, "direct").value
bij = count_all_islands(S, "convex_bijection").value
print("all islands, direct vs convex subsets:", direct, bij)
