"""
Point sets and general position
===============================

The text format is a "d n" header followed by one point per line.  Decimal
literals are read as the exact binary value of the double they denote.
"""

from kislands import is_general_position, is_strongly_general_position, parse_pointset, serialize_pointset

text = """# label: small example
2 4
0 0
1/3 2/3
1 0.25
2 1
"""
S = parse_pointset(text)
print(S.dim, S.n, S.label)
print(serialize_pointset(S))
assert parse_pointset(serialize_pointset(S)) == S

print("general position:", is_general_position(S))
print("strongly general position:", is_strongly_general_position(S))

# equal first coordinates break the strong version only
T = parse_pointset("2 3\n0 0\n0 1\n2 5\n")
print(is_general_position(T), is_strongly_general_position(T))
