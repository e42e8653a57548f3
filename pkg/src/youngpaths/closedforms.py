"""Special shapes with closed-form arrays, and the binomial sums behind them.

* staircase ``(2n+1, 2n, ..., 1)``: ``D[i][j] = Catalan(2n+2-i-j)``
* square ``(n^n)``: ``D[i][j] = C(2n-i-j, n-i)`` and ``c_ij = C(n-j, i-j)``
"""
from __future__ import annotations

from dataclasses import dataclass

from .binomial import binomial, catalan, sign
from .gram import basis_coefficient, basis_expansion, pairing
from .partition import Partition, durfee
from .patharray import path_count_array
from .report import Check, VerificationReport

__all__ = [
    "IdentityInstance",
    "binomial",
    "catalan",
    "closed_form_suite",
    "knuth_identity_check",
    "square_check",
    "staircase_check",
    "staircase_partition",
    "square_partition",
    "substituted_identity_check",
]


@dataclass(frozen=True)
class IdentityInstance:
    name: str
    params: dict[str, int]
    lhs: int
    rhs: int

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs

    def as_check(self) -> Check:
        return Check(self.name, dict(self.params), self.lhs, self.rhs)


def knuth_identity_check(r: int, s: int, n: int) -> IdentityInstance:
    """sum_k (-1)^(r-k) C(r,k) C(s+k,n) = C(s, n-r)."""
    if min(r, s, n) < 0:
        raise ValueError("r, s, n must be non-negative")
    lhs = sum(sign(r - k) * binomial(r, k) * binomial(s + k, n) for k in range(r + 1))
    return IdentityInstance("knuth", {"r": r, "s": s, "n": n}, lhs, binomial(s, n - r))


def substituted_identity_check(i: int, j: int) -> IdentityInstance:
    """sum_k (-1)^(k-j) C(i+k, i) C(j, j-k) = C(i, i-j), the square case after i -> n-i."""
    if min(i, j) < 0:
        raise ValueError("i, j must be non-negative")
    # C(j, j-k) vanishes outside 0 <= k <= j
    lhs = sum(sign(k - j) * binomial(i + k, i) * binomial(j, j - k) for k in range(j + 1))
    return IdentityInstance("substituted", {"i": i, "j": j}, lhs, binomial(i, i - j))


def staircase_partition(n: int) -> Partition:
    return Partition(tuple(range(2 * n + 1, 0, -1)))


def square_partition(n: int) -> Partition:
    return Partition((n,) * n)


def staircase_check(n: int) -> VerificationReport:
    """Catalan entries on the Durfee square and the reflected basis formula."""
    if n < 0:
        raise ValueError("n must be >= 0")
    p = staircase_partition(n)
    d = path_count_array(p)
    size = durfee(p)
    checks = [Check("durfee-size", {}, size, n + 1)]
    for i in range(1, size + 1):
        for j in range(1, size + 1):
            checks.append(Check("catalan-entry", {"i": i, "j": j}, d[i, j], catalan(2 * n + 2 - i - j)))
    # Reflected indices i' = n+1-i run over 0..n; y_{j'} only involves x_{i'} with i' <= j'.
    for j in range(1, size + 1):
        y = basis_expansion(p, j)
        jr = n + 1 - j
        for i in range(j, size + 1):
            ir = n + 1 - i
            expected = sign(jr - ir) * binomial(ir + jr, jr - ir)
            checks.append(Check("reflected-basis", {"i'": ir, "j'": jr}, y.coefficient(i), expected))
    return VerificationReport(p, checks, subject={"family": "staircase", "n": n})


def square_check(n: int) -> VerificationReport:
    """Binomial entries and coefficients for (n^n), plus the substituted sum."""
    if n < 1:
        raise ValueError("n must be >= 1")
    p = square_partition(n)
    d = path_count_array(p)
    checks = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            checks.append(Check("square-entry", {"i": i, "j": j}, d[i, j], binomial(2 * n - i - j, n - i)))
    for j in range(1, n + 1):
        for i in range(j, n + 1):
            ij = {"i": i, "j": j}
            checks.append(Check("square-coefficient", ij, basis_coefficient(p, i, j), binomial(n - j, i - j)))
            lhs = sum(
                sign(j - k) * binomial(2 * n - i - k, n - i) * binomial(n - j, k - j)
                for k in range(j, n + 1)
            )
            checks.append(Check("square-pairing", ij, lhs, int(i == j)))
            checks.append(Check("square-pairing-array", ij, pairing(p, j, i, d), int(i == j)))
    for i in range(n + 1):
        for j in range(n + 1):
            checks.append(substituted_identity_check(i, j).as_check())
    return VerificationReport(p, checks, subject={"family": "square", "n": n})


def closed_form_suite(
    staircase_max: int = 3, square_max: int = 6, knuth_max: int = 8, substituted_max: int = 8
) -> list[VerificationReport]:
    """Every closed-form family and identity over its standard parameter box."""
    reports = [staircase_check(n) for n in range(staircase_max + 1)]
    reports += [square_check(n) for n in range(1, square_max + 1)]
    knuth = [
        knuth_identity_check(r, s, m).as_check()
        for r in range(knuth_max + 1)
        for s in range(knuth_max + 1)
        for m in range(knuth_max + 1)
    ]
    reports.append(VerificationReport(None, knuth, subject={"family": "knuth", "max": knuth_max}))
    subs = [
        substituted_identity_check(i, j).as_check()
        for i in range(substituted_max + 1)
        for j in range(substituted_max + 1)
    ]
    reports.append(VerificationReport(None, subs, subject={"family": "substituted", "max": substituted_max}))
    return reports

