from fractions import Fraction

import pytest

from youngpaths import (
    Partition,
    basis,
    basis_coefficient,
    basis_coefficient_minor,
    basis_expansion,
    conjugate,
    durfee,
    enumerate_disjoint_systems,
    gram_determinant,
    pairing,
    path_count_array,
    verify_identities,
)
from youngpaths.gram import basis_gram_matrix, conjugate_pairing

from conftest import partitions_up_to
from oracles import array_by_words, leibniz_det, pascal_binomial


def gram_schmidt_from_the_end(form, n):
    """Orthogonalize x_n, x_{n-1}, ..., x_1 over the rationals; vectors are coordinate lists."""
    def ip(u, v):
        return sum(u[a] * form[a][b] * v[b] for a in range(n) for b in range(n))

    zs = {}
    for j in range(n - 1, -1, -1):
        z = [Fraction(int(k == j)) for k in range(n)]
        x = list(z)
        for k, zk in zs.items():
            coef = ip(x, zk) / ip(zk, zk)
            z = [a - coef * b for a, b in zip(z, zk)]
        zs[j] = z
    return [zs[j] for j in range(n)]


def test_gram_determinant(shape_5433):
    assert gram_determinant(shape_5433, 1) == 1
    assert gram_determinant(shape_5433, 3) == 1
    conj = Partition((4, 4, 4, 2, 1))
    words = array_by_words(conj.parts)
    assert leibniz_det([row[:3] for row in words[:3]]) == 1
    assert gram_determinant(conj, 1) == 1
    with pytest.raises(IndexError):
        gram_determinant(shape_5433, 4)
    with pytest.raises(IndexError):
        gram_determinant(shape_5433, 0)


def test_basis_coefficient(shape_5433):
    assert basis_coefficient(shape_5433, 2, 1) == 3
    assert basis_coefficient(shape_5433, 2, 2) == 1
    conj = Partition((4, 4, 4, 2, 1))
    assert basis_coefficient(conj, 3, 1) == 3
    with pytest.raises(IndexError):
        basis_coefficient(shape_5433, 1, 2)


def test_basis_coefficient_minor(shape_5433):
    assert leibniz_det([[7, 2], [2, 1]]) == 3
    assert basis_coefficient_minor(shape_5433, 2, 1) == 3
    assert basis_coefficient_minor(shape_5433, 3, 3) == 1
    conj = Partition((4, 4, 4, 2, 1))
    words = array_by_words(conj.parts)
    minor = [[words[0][1], words[0][2]], [words[1][1], words[1][2]]]
    assert minor == [[6, 3], [3, 2]]
    assert basis_coefficient_minor(conj, 3, 1) == leibniz_det(minor) == 3


def test_cofactor_paths_are_indexed_by_turning_column(shape_5433):
    # i=2, j=1: the only free path runs from the foot of column 2 to the end of row 1
    # and turns east in row 2 at column m, then north into row 1 at that column.
    systems = enumerate_disjoint_systems(shape_5433, [2, 3], [1, 3])
    assert len(systems) == 3
    turns = []
    for s in systems:
        assert s.is_identity()
        free = s.paths[0].boxes
        assert free[0] == (4, 2) and free[-1] == (1, 5)
        turns.append(next(b.col for a, b in zip(free, free[1:]) if b.row == 1 and a.row == 2))
    assert sorted(turns) == [2, 3, 4]


def test_basis_expansion():
    p = Partition((5, 4, 3, 3))
    assert basis_expansion(p, 1).coefficients == (1, -3, 1)
    assert basis_expansion(p, 3).coefficients == (1,)
    assert basis_expansion(Partition((3, 2, 1)), 1).coefficients == (1, -1)
    assert [y.render() for y in basis(p)] == ["y_1 = x_1 - 3*x_2 + x_3", "y_2 = x_2 - x_3", "y_3 = x_3"]
    assert basis_expansion(p, 2).vector() == [0, 1, -1]
    with pytest.raises(IndexError):
        basis_expansion(p, 4)


def test_pairing_examples(shape_5433):
    assert pairing(shape_5433, 1, 1) == 16 - 3 * 6 + 3 == 1
    assert pairing(shape_5433, 1, 2) == 7 - 9 + 2 == 0
    # i < j lies outside the identity and does not vanish
    assert pairing(shape_5433, 2, 1) == 6 - 3 == 3


def test_verify_identities_examples(shape_5433):
    rep = verify_identities(shape_5433)
    assert rep.passed
    assert {c.name for c in rep.checks} == {"main", "conjugate", "coefficient"}
    assert rep.skipped
    rep = verify_identities(Partition((4, 3, 2, 1)))
    assert rep.passed and not rep.skipped
    assert sum(c.name == "orthonormal" for c in rep.checks) == durfee(Partition((4, 3, 2, 1))) ** 2
    empty = verify_identities(Partition())
    assert empty.passed and empty.checks == []


def test_identity_sweep():
    for p in partitions_up_to(14):
        n = durfee(p)
        d = path_count_array(p)
        q = conjugate(p)
        for k in range(1, n + 1):
            assert gram_determinant(p, k, d) == 1
        for j in range(1, n + 1):
            for i in range(j, n + 1):
                delta = int(i == j)
                assert pairing(p, j, i, d) == delta
                # conjugate identity written out independently
                assert sum(
                    (-1) ** (k - j) * d[i, k] * pascal_binomial(q.row_length(k) - j, k - j) for k in range(j, n + 1)
                ) == delta
                assert conjugate_pairing(p, j, i, d) == delta
                closed = pascal_binomial(p.row_length(i) - j, i - j)
                assert basis_coefficient(p, i, j) == closed
                assert basis_coefficient_minor(p, i, j, d) == closed


def test_cofactor_system_counts():
    for p in partitions_up_to(12):
        n = durfee(p)
        for j in range(1, n + 1):
            for i in range(j, n + 1):
                rows = [r for r in range(j, n + 1) if r != i]
                cols = list(range(j + 1, n + 1))
                systems = enumerate_disjoint_systems(p, cols, rows)
                assert all(s.is_identity() for s in systems)
                assert len(systems) == basis_coefficient(p, i, j)


def test_orthonormality_sweep():
    seen = 0
    for p in partitions_up_to(16):
        if not p.is_self_conjugate():
            continue
        seen += 1
        n = durfee(p)
        assert basis_gram_matrix(p) == [[int(a == b) for b in range(n)] for a in range(n)]
    assert seen > 10


@pytest.mark.parametrize("parts", [(4, 3, 2, 1), (3, 2, 1), (5, 5, 3, 2, 2), (4, 4, 2, 2), (6, 5, 3, 2, 2, 1)])
def test_basis_is_gram_schmidt(parts):
    p = Partition(parts)
    assert p.is_self_conjugate()
    n = durfee(p)
    d = path_count_array(p)
    form = [[d[a, b] for b in range(1, n + 1)] for a in range(1, n + 1)]
    zs = gram_schmidt_from_the_end(form, n)
    assert [[int(v) for v in z] for z in zs] == [y.vector() for y in basis(p)]
    assert all(v.denominator == 1 for z in zs for v in z)
