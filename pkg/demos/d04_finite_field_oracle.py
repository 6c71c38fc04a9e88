"""
Brute force over small finite fields
====================================

Enumerate every nilpotent 3x3 matrix over F4, confirm the q^(n(n-1))
count, and check that the twisted map M -> -(M^(2))^T keeps each Jordan
type. Then look for a rational point of each orbit.
"""

from collections import Counter

from nilorbit.oracle import (
    GF,
    batch_jordan_types,
    centralizer_dim,
    find_fixed_point,
    jordan_matrix,
    nilpotent_array,
    verify_orbit_stability,
)

F = GF(2, 2)
A = nilpotent_array(3, F)
print(len(A), "nilpotent matrices; 4**6 =", 4**6)
print(Counter(str(t) for t in batch_jordan_types(F, A)))

report = verify_orbit_stability(3, F, "twisted")
print("twisted map preserves Jordan types:", report.passed)

for parts in ([3], [2, 1], [1, 1, 1]):
    M = find_fixed_point(parts, 2)
    print(parts, "fixed point", M.tolist())

# orbit dimension = n^2 - dim of the centralizer in gl_n
for parts in ([3], [2, 1], [1, 1, 1]):
    print(parts, "orbit dim", 9 - centralizer_dim(jordan_matrix(parts)))
