"""
Horton sets
===========

Sets are built with a candidate scale and certified by the exact
verifier; the scale doubles until the certificate goes through.
"""

import time

from kislands import count_k_subsets, horton_d, horton_planar, largest_hole_size, verify_horton

H = horton_planar(16)
print([tuple(int(c) for c in p) for p in H.points])
print(verify_horton(H).to_dict())

t = time.time()
H64 = horton_planar(64)
print("n=64: 7-holes", count_k_subsets(H64, 7, "hole").value, "largest hole", largest_hole_size(H64),
      f"({time.time() - t:.1f}s)")

H3 = horton_d(3, 18)
rep = verify_horton(H3)
print("3-Horton, n=18 certified:", rep.ok, "projection certified:", verify_horton(H3.project()).ok)
