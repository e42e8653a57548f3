"""Exit criteria. Each test records one PASS/FAIL line, printed after the run."""
import time

import pytest

from youngpaths import (
    Partition,
    Selection,
    basis_coefficient,
    basis_coefficient_minor,
    check_determinant_one,
    conjugate,
    conjugate_pairing,
    determinant,
    durfee,
    enumerate_disjoint_systems,
    enumerate_partitions,
    gram_determinant,
    knuth_identity_check,
    pairing,
    path_count_array,
    path_matrix,
    scan_unit_selections,
    se_unit_selections,
    square_check,
    staircase_check,
    substituted_identity_check,
    truncate,
    verify_lgv,
)
from youngpaths.gram import basis_gram_matrix
from youngpaths.lgv import contiguous_selections

RESULTS: list[str] = []


@pytest.fixture
def criterion(request):
    label = request.node.get_closest_marker("criterion").args[0]
    yield
    rep = getattr(request.node, "rep_call", None)
    ok = rep is not None and rep.passed
    RESULTS.append(f"[{'PASS' if ok else 'FAIL'}] {label}")


def upto(n):
    return list(enumerate_partitions(n))


@pytest.mark.criterion("1 reference array for (5,4,3,3), exact, < 1 ms")
def test_01_reference_array(criterion):
    p = Partition((5, 4, 3, 3))
    assert path_count_array(p).to_lists() == [[16, 7, 2, 1, 1], [6, 3, 1, 1], [3, 2, 1], [1, 1, 1]]
    best = min(_timed(path_count_array, p) for _ in range(50))
    assert best < 1e-3, f"{best * 1e3:.3f} ms"


def _timed(fn, *args):
    t0 = time.perf_counter()
    fn(*args)
    return time.perf_counter() - t0


@pytest.mark.criterion("2 det [[16,7,2],[6,3,1],[3,2,1]] = 1")
def test_02_reference_determinant(criterion):
    assert determinant([[16, 7, 2], [6, 3, 1], [3, 2, 1]]) == 1


@pytest.mark.criterion("3 unit-corner contiguous blocks have det 1, |λ| <= 14, < 60 s")
def test_03_determinant_one_sweep(criterion):
    t0 = time.perf_counter()
    checked = 0
    for p in upto(14):
        rep = check_determinant_one(p)
        assert rep.passed, [c.describe() for c in rep.failures()]
        checked += len(rep.checks)
    assert checked > 0
    assert time.perf_counter() - t0 < 60


@pytest.mark.criterion("4 det = signed disjoint-system count, |λ| <= 10, order <= 3, < 120 s")
def test_04_lgv_oracle(criterion):
    t0 = time.perf_counter()
    for p in upto(10):
        d = path_count_array(p)
        for sel in contiguous_selections(p, 3):
            rep = verify_lgv(p, sel, array=d)
            assert rep.verdict == "equal", (p, sel, rep)
    assert time.perf_counter() - t0 < 120


@pytest.mark.criterion("5 unit-corner blocks: exactly one system, identity, all hooks")
def test_05_hook_uniqueness(criterion):
    for p in upto(14):
        for sel in se_unit_selections(p):
            systems = enumerate_disjoint_systems(p, sel.cols, sel.rows)
            assert len(systems) == 1, (p, sel)
            assert systems[0].is_identity(), (p, sel)
            assert all(path.is_hook() for path in systems[0].paths), (p, sel)


@pytest.mark.criterion("6 main and conjugate identities = delta, closed c_ij = cofactor, |λ| <= 14")
def test_06_identities(criterion):
    for p in upto(14):
        d = path_count_array(p)
        n = durfee(p)
        for j in range(1, n + 1):
            for i in range(j, n + 1):
                delta = int(i == j)
                assert pairing(p, j, i, d) == delta, (p, i, j)
                assert conjugate_pairing(p, j, i, d) == delta, (p, i, j)
                assert basis_coefficient(p, i, j) == basis_coefficient_minor(p, i, j, d), (p, i, j)


@pytest.mark.criterion("7 Yt D Y = I for self-conjugate |λ| <= 16")
def test_07_orthonormality(criterion):
    count = 0
    for p in upto(16):
        if p.is_self_conjugate():
            n = durfee(p)
            assert basis_gram_matrix(p) == [[int(a == b) for b in range(n)] for a in range(n)], p
            count += 1
    assert count > 0


@pytest.mark.criterion("8 Gram determinants G_k = 1, |λ| <= 14")
def test_08_gram_determinants(criterion):
    for p in upto(14):
        d = path_count_array(p)
        for k in range(1, durfee(p) + 1):
            assert gram_determinant(p, k, d) == 1, (p, k)


@pytest.mark.criterion("9 staircase n <= 3, square n <= 6, Knuth r,s,n <= 8, substituted sum n <= 8")
def test_09_special_cases(criterion):
    for n in range(4):
        assert staircase_check(n).passed, n
    for n in range(1, 7):
        assert square_check(n).passed, n
    for r in range(9):
        for s in range(9):
            for n in range(9):
                assert knuth_identity_check(r, s, n).passed, (r, s, n)
    for n in range(9):
        for i in range(n + 1):
            for j in range(n + 1):
                assert substituted_identity_check(i, j).passed, (i, j)


@pytest.mark.criterion("10 transpose duality and truncation compatibility, |λ| <= 14")
def test_10_dualities(criterion):
    for p in upto(14):
        d, dc = path_count_array(p), path_count_array(conjugate(p))
        for i, j in p.boxes():
            assert dc[j, i] == d[i, j]
        if not p:
            continue
        rows_cut, cols_cut = truncate(p, 1, 0), truncate(p, 0, 1)
        dr, dcol = path_count_array(rows_cut), path_count_array(cols_cut)
        for i, j in rows_cut.boxes():
            assert dr[i, j] == d[i + 1, j]
        for i, j in cols_cut.boxes():
            assert dcol[i, j] == d[i, j + 1]


@pytest.mark.criterion("11 negative control: rows {1,3} x cols {1,3} on (5,4,3,3) has det 10, flagged uncertified")
def test_11_negative_control(criterion):
    p = Partition((5, 4, 3, 3))
    sel = Selection((1, 3), (1, 3))
    assert path_count_array(p)[3, 3] == 1
    assert determinant(path_matrix(p, sel)) == 10
    assert sel not in se_unit_selections(p)
    scan = scan_unit_selections(p)
    assert (sel, 10) in scan.outside_certified()
    assert scan.certified_violations() == []
