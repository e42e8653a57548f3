"""
Staircases, squares and a binomial sum
======================================

The staircase (2n+1, ..., 1) is filled with Catalan numbers; the square
(n^n) with binomial coefficients. Both reduce to explicit binomial sums.
"""
from youngpaths import (
    catalan,
    knuth_identity_check,
    path_count_array,
    square_check,
    staircase_check,
    substituted_identity_check,
)
from youngpaths.closedforms import staircase_partition

print(path_count_array(staircase_partition(2)).render())
print("Catalan:", [catalan(m) for m in range(7)])
for n in range(4):
    rep = staircase_check(n)
    print(f"staircase n={n}: {len(rep.checks)} checks, pass={rep.passed}")
for n in range(1, 7):
    rep = square_check(n)
    print(f"square n={n}: {len(rep.checks)} checks, pass={rep.passed}")

inst = knuth_identity_check(2, 3, 2)
print("knuth r=2 s=3 n=2:", inst.lhs, "=", inst.rhs)
inst = substituted_identity_check(2, 1)
print("substituted i=2 j=1:", inst.lhs, "=", inst.rhs)
