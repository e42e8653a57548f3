"""
An integral orthonormal basis
=============================

On the Durfee square, <x_a, x_b> = D[a][b]. The vectors
y_j = sum_i (-1)^(i-j) C(λ_i - j, i - j) x_i are orthonormal when the shape
is self-conjugate, and satisfy <y_j, x_i> = δ_ij (i >= j) for every shape.
"""
from youngpaths import Partition, basis, gram_determinant, pairing, verify_identities
from youngpaths.gram import basis_gram_matrix

shape = Partition((5, 5, 3, 2, 2))
assert shape.is_self_conjugate()
for y in basis(shape):
    print(y.render())
print("Gram determinants:", [gram_determinant(shape, k) for k in (1, 2, 3)])
for row in basis_gram_matrix(shape):
    print("  ", row)

# Not self-conjugate: the form is not symmetric, but the one-sided identity still holds.
other = Partition((5, 4, 3, 3))
print([[pairing(other, j, i) for i in (1, 2, 3)] for j in (1, 2, 3)])
print(verify_identities(other).render())
