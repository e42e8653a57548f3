"""Integral orthonormal basis on the Durfee square.

The formal vectors ``x_1..x_n`` (``n`` the Durfee size) carry the bilinear
form ``<x_a, x_b> = D[a][b]``. Everything is exact: ``y_j`` is an integer
coordinate vector over ``x_j..x_n``, never a float. The form is symmetric
only for self-conjugate shapes, so ``pairing`` keeps ``y`` on the left.
"""
from __future__ import annotations

from dataclasses import dataclass

from .binomial import binomial, sign
from .lgv import Selection, determinant, path_matrix
from .partition import Partition, conjugate, durfee
from .patharray import PathCountArray, path_count_array
from .report import Check, VerificationReport


def _check_range(p: Partition, *indices: int) -> int:
    n = durfee(p)
    for idx in indices:
        if not 1 <= idx <= n:
            raise IndexError(f"index {idx} outside 1..{n} for {p!r}")
    return n


def _check_lower(p: Partition, i: int, j: int) -> int:
    n = _check_range(p, i, j)
    if j > i:
        raise IndexError(f"need j <= i, got i={i}, j={j}")
    return n


def gram_determinant(p: Partition, k: int, array: PathCountArray | None = None) -> int:
    """det of the trailing minor [D[a][b]] for k <= a, b <= n."""
    n = _check_range(p, k)
    return determinant(path_matrix(p, Selection.block(k, k, n - k + 1), array))


def basis_coefficient(p: Partition, i: int, j: int) -> int:
    """c_ij = C(λ_i - j, i - j)."""
    _check_lower(p, i, j)
    return binomial(p.row_length(i) - j, i - j)


def basis_coefficient_minor(
    p: Partition, i: int, j: int, array: PathCountArray | None = None
) -> int:
    """c_ij as a cofactor: sinks rows j..n without i, sources columns j+1..n."""
    n = _check_lower(p, i, j)
    rows = tuple(r for r in range(j, n + 1) if r != i)
    cols = tuple(range(j + 1, n + 1))
    return determinant(path_matrix(p, Selection(rows, cols), array))


@dataclass(frozen=True)
class BasisExpansion:
    """y_j = sum over i = j..n of coefficients[i - j] * x_i."""

    j: int
    n: int
    coefficients: tuple[int, ...]

    def coefficient(self, i: int) -> int:
        """Coefficient of x_i; zero below j."""
        if not 1 <= i <= self.n:
            raise IndexError(f"x_{i} is not a basis vector (n={self.n})")
        return self.coefficients[i - self.j] if i >= self.j else 0

    def vector(self) -> list[int]:
        """Coordinates over x_1..x_n."""
        return [self.coefficient(i) for i in range(1, self.n + 1)]

    def render(self) -> str:
        terms = []
        for i, c in enumerate(self.coefficients, start=self.j):
            if c == 0:
                continue
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            if not terms:
                terms.append(f"{'-' if c < 0 else ''}{mag}x_{i}")
            else:
                terms.append(f"{'-' if c < 0 else '+'} {mag}x_{i}")
        return f"y_{self.j} = " + (" ".join(terms) if terms else "0")

    def to_dict(self) -> dict:
        return {"j": self.j, "coefficients": [str(c) for c in self.coefficients]}


def basis_expansion(p: Partition, j: int) -> BasisExpansion:
    n = _check_range(p, j)
    coeffs = tuple(sign(i - j) * basis_coefficient(p, i, j) for i in range(j, n + 1))
    return BasisExpansion(j, n, coeffs)


def basis(p: Partition) -> list[BasisExpansion]:
    return [basis_expansion(p, j) for j in range(1, durfee(p) + 1)]


def pairing(p: Partition, j: int, i: int, array: PathCountArray | None = None) -> int:
    """<y_j, x_i> = sum_k (-1)^(k-j) c_kj D[k][i]; equals δ_ij for i >= j."""
    n = _check_range(p, i, j)
    d = array if array is not None else path_count_array(p)
    return sum(
        sign(k - j) * binomial(p.row_length(k) - j, k - j) * d[k, i]
        for k in range(j, n + 1)
    )


def conjugate_pairing(p: Partition, j: int, i: int, array: PathCountArray | None = None) -> int:
    """sum_k (-1)^(k-j) D[i][k] C(λ'_k - j, k - j): the pairing read off the conjugate."""
    n = _check_range(p, i, j)
    d = array if array is not None else path_count_array(p)
    q = conjugate(p)
    return sum(
        sign(k - j) * d[i, k] * binomial(q.row_length(k) - j, k - j)
        for k in range(j, n + 1)
    )


def basis_gram_matrix(p: Partition, array: PathCountArray | None = None) -> list[list[int]]:
    """[<y_a, y_b>] over the Durfee square, i.e. Yᵀ·D·Y with Y's columns the y_j."""
    n = durfee(p)
    d = array if array is not None else path_count_array(p)
    ys = [b.vector() for b in basis(p)]
    dy = [[sum(d[r, c] * ys[b][c - 1] for c in range(1, n + 1)) for b in range(n)] for r in range(1, n + 1)]
    return [[sum(ys[a][r] * dy[r][b] for r in range(n)) for b in range(n)] for a in range(n)]


def verify_identities(p: Partition) -> VerificationReport:
    """Main and conjugate identities, closed vs cofactor coefficients, and orthonormality."""
    n = durfee(p)
    d = path_count_array(p)
    checks = []
    for j in range(1, n + 1):
        for i in range(j, n + 1):
            delta = int(i == j)
            ij = {"i": i, "j": j}
            checks.append(Check("main", ij, pairing(p, j, i, d), delta))
            checks.append(Check("conjugate", ij, conjugate_pairing(p, j, i, d), delta))
            checks.append(
                Check("coefficient", ij, basis_coefficient_minor(p, i, j, d), basis_coefficient(p, i, j))
            )
    skipped = []
    if p.is_self_conjugate():
        gram = basis_gram_matrix(p, d)
        for a in range(n):
            for b in range(n):
                checks.append(Check("orthonormal", {"a": a + 1, "b": b + 1}, gram[a][b], int(a == b)))
    else:
        skipped.append("orthonormal: shape is not self-conjugate")
    return VerificationReport(p, checks, skipped)
