"""Path matrices, exact determinants and vertex-disjoint path systems.

Matrices are oriented with rows indexed by row ends (sinks) and columns by
column feet (sources). This is the transpose of the usual ``e(a_i, b_j)``
layout and has the same determinant.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .partition import BoxCoord, Partition, PartitionError, contains_box
from .patharray import LatticePath, PathCountArray, path_count_array
from .report import Check, VerificationReport

DEFAULT_SYSTEM_BUDGET = 10**7


class SystemBudgetExceeded(RuntimeError):
    """Raised when the disjoint-system search visits more states than allowed."""

    def __init__(self, budget: int):
        super().__init__(f"disjoint-system search exceeded its budget of {budget} states")
        self.budget = budget


@dataclass(frozen=True)
class Selection:
    """Square choice of rows (sinks) and columns (sources), both increasing."""

    rows: tuple[int, ...]
    cols: tuple[int, ...]

    def __post_init__(self) -> None:
        rows, cols = tuple(self.rows), tuple(self.cols)
        if len(rows) != len(cols):
            raise ValueError(f"selection is not square: {len(rows)} rows, {len(cols)} cols")
        for name, idx in (("rows", rows), ("cols", cols)):
            if any(a >= b for a, b in zip(idx, idx[1:])):
                raise ValueError(f"{name} must be strictly increasing: {idx}")
            if idx and idx[0] < 1:
                raise ValueError(f"{name} must be 1-based: {idx}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)

    @property
    def order(self) -> int:
        return len(self.rows)

    @property
    def corner(self) -> BoxCoord:
        return BoxCoord(self.rows[-1], self.cols[-1])

    def is_contiguous(self) -> bool:
        return all(b - a == 1 for idx in (self.rows, self.cols) for a, b in zip(idx, idx[1:]))

    def is_valid_for(self, p: Partition) -> bool:
        # Young diagrams are closed under decreasing either coordinate, so
        # the corner box being present puts every selected box in the diagram.
        return not self.rows or contains_box(p, self.corner)

    @classmethod
    def block(cls, top: int, left: int, order: int) -> "Selection":
        return cls(tuple(range(top, top + order)), tuple(range(left, left + order)))


@dataclass(frozen=True)
class ExactMatrix:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        if any(len(row) != len(rows) for row in rows):
            raise ValueError("matrix is not square")
        object.__setattr__(self, "rows", rows)

    @property
    def order(self) -> int:
        return len(self.rows)

    def __getitem__(self, rc: tuple[int, int]) -> int:
        r, c = rc
        return self.rows[r][c]

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.rows]


def _as_matrix(m: ExactMatrix | Sequence[Sequence[int]]) -> ExactMatrix:
    return m if isinstance(m, ExactMatrix) else ExactMatrix(tuple(tuple(row) for row in m))


def determinant(m: ExactMatrix | Sequence[Sequence[int]]) -> int:
    """Exact determinant by Bareiss fraction-free elimination."""
    m = _as_matrix(m)
    n = m.order
    if n == 0:
        return 1
    a = [list(row) for row in m.rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact division: Sylvester's identity
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def cofactor_determinant(m: ExactMatrix | Sequence[Sequence[int]]) -> int:
    """Laplace expansion along the first row. Exponential; an oracle for small orders."""
    m = _as_matrix(m)
    rows = [list(row) for row in m.rows]

    def expand(rows: list[list[int]]) -> int:
        if not rows:
            return 1
        total = 0
        for c, head in enumerate(rows[0]):
            if head:
                minor = [row[:c] + row[c + 1:] for row in rows[1:]]
                total += (-1) ** c * head * expand(minor)
        return total

    return expand(rows)


def path_matrix(
    p: Partition, sel: Selection, array: PathCountArray | None = None
) -> ExactMatrix:
    """Entry (r, s) is D[rows[r]][cols[s]]."""
    if not sel.is_valid_for(p):
        raise PartitionError(f"selection corner {sel.corner} is not in the diagram of {p!r}")
    d = array if array is not None else path_count_array(p)
    return ExactMatrix(tuple(tuple(d[i, j] for j in sel.cols) for i in sel.rows))


@dataclass(frozen=True)
class DisjointSystem:
    """Vertex-disjoint paths; ``permutation[k]`` is the sink index reached from source k."""

    permutation: tuple[int, ...]
    paths: tuple[LatticePath, ...]

    @property
    def sign(self) -> int:
        return permutation_sign(self.permutation)

    def is_identity(self) -> bool:
        return all(k == s for k, s in enumerate(self.permutation))


def permutation_sign(perm: Sequence[int]) -> int:
    inversions = sum(1 for a, b in itertools.combinations(perm, 2) if a > b)
    return -1 if inversions % 2 else 1


def enumerate_disjoint_systems(
    p: Partition,
    sources: Sequence[int],
    sinks: Sequence[int],
    budget: int = DEFAULT_SYSTEM_BUDGET,
) -> list[DisjointSystem]:
    """Every tuple of pairwise box-disjoint paths from column feet to row ends.

    Sources are handled left to right; each is routed to every unused sink
    along every path that avoids boxes already occupied. ``budget`` caps the
    number of search states (path extensions) visited.
    """
    if len(sources) != len(sinks):
        raise ValueError("need as many sinks as sources")
    feet = [p.foot(j) for j in sources]
    ends = [p.row_end(i) for i in sinks]
    n = len(feet)
    systems: list[DisjointSystem] = []
    occupied: set[BoxCoord] = set()
    perm: list[int] = []
    chosen: list[LatticePath] = []
    visited = 0

    def tick() -> None:
        nonlocal visited
        visited += 1
        if visited > budget:
            raise SystemBudgetExceeded(budget)

    def route(k: int) -> None:
        if k == n:
            systems.append(DisjointSystem(tuple(perm), tuple(chosen)))
            return
        start = feet[k]
        if start in occupied:
            return
        for s, end in enumerate(ends):
            if s in perm or end in occupied:
                continue
            if end.row > start.row or end.col < start.col:
                continue
            perm.append(s)
            trail = [start]
            occupied.add(start)
            extend(k, start, end, trail)
            occupied.discard(start)
            perm.pop()

    def extend(k: int, box: BoxCoord, end: BoxCoord, trail: list[BoxCoord]) -> None:
        tick()
        if box == end:
            chosen.append(LatticePath(tuple(trail)))
            route(k + 1)
            chosen.pop()
            return
        r, c = box
        for nxt in (BoxCoord(r - 1, c), BoxCoord(r, c + 1)):
            if nxt.row < end.row or nxt.col > end.col:
                continue
            if not contains_box(p, nxt) or nxt in occupied:
                continue
            occupied.add(nxt)
            trail.append(nxt)
            extend(k, nxt, end, trail)
            trail.pop()
            occupied.discard(nxt)

    route(0)
    return systems


def signed_system_count(systems: Iterable[DisjointSystem]) -> int:
    return sum(s.sign for s in systems)


@dataclass(frozen=True)
class LGVReport:
    partition: Partition
    selection: Selection
    determinant: int
    signed_count: int | None
    num_systems: int | None

    @property
    def verdict(self) -> str:
        if self.signed_count is None:
            return "inconclusive"
        return "equal" if self.signed_count == self.determinant else "unequal"


def verify_lgv(
    p: Partition,
    sel: Selection,
    budget: int = DEFAULT_SYSTEM_BUDGET,
    array: PathCountArray | None = None,
) -> LGVReport:
    """Compare det of the path matrix with the signed count of disjoint systems."""
    det = determinant(path_matrix(p, sel, array))
    try:
        systems = enumerate_disjoint_systems(p, sel.cols, sel.rows, budget)
    except SystemBudgetExceeded:
        return LGVReport(p, sel, det, None, None)
    return LGVReport(p, sel, det, signed_system_count(systems), len(systems))


def contiguous_selections(p: Partition, max_order: int | None = None) -> list[Selection]:
    """Every contiguous square block inside the diagram, by order, then top row, then left column."""
    out = []
    order = 1
    while max_order is None or order <= max_order:
        level = [
            Selection.block(top, left, order)
            for top in range(1, len(p) - order + 2)
            for left in range(1, p.row_length(top + order - 1) - order + 2)
        ]
        if not level:
            break
        out.extend(level)
        order += 1
    return out


def se_unit_selections(p: Partition, array: PathCountArray | None = None) -> list[Selection]:
    """Contiguous square blocks whose lower-right entry is 1."""
    d = array if array is not None else path_count_array(p)
    return [sel for sel in contiguous_selections(p) if d[sel.corner] == 1]


def determinant_check(sel: Selection, det: int) -> Check:
    return Check("det-one", {"rows": list(sel.rows), "cols": list(sel.cols)}, det, 1)


def check_determinant_one(p: Partition) -> VerificationReport:
    d = path_count_array(p)
    checks = [
        determinant_check(sel, determinant(path_matrix(p, sel, d)))
        for sel in se_unit_selections(p, d)
    ]
    return VerificationReport(p, checks)


@dataclass(frozen=True)
class ScanResult:
    """Exploratory scan over arbitrary unit-corner selections; never part of pass/fail."""

    partition: Partition
    entries: tuple[tuple[Selection, int], ...] = field(default=())

    def outside_certified(self) -> list[tuple[Selection, int]]:
        """Non-contiguous selections whose determinant is not 1."""
        return [(sel, det) for sel, det in self.entries if det != 1 and not sel.is_contiguous()]

    def certified_violations(self) -> list[tuple[Selection, int]]:
        return [(sel, det) for sel, det in self.entries if det != 1 and sel.is_contiguous()]


def scan_unit_selections(
    p: Partition,
    max_order: int = 3,
    samples: int | None = None,
    seed: int | None = None,
) -> ScanResult:
    """Determinants of every (or a seeded sample of) square selection with unit corner.

    Row and column subsets need not be contiguous here.
    """
    d = path_count_array(p)
    candidates = []
    for order in range(1, max_order + 1):
        for rows in itertools.combinations(range(1, len(p) + 1), order):
            for cols in itertools.combinations(range(1, p.row_length(rows[-1]) + 1), order):
                if d[rows[-1], cols[-1]] == 1:
                    candidates.append(Selection(rows, cols))
    if samples is not None and samples < len(candidates):
        rng = random.Random(seed)
        picked = sorted(rng.sample(range(len(candidates)), samples))
        candidates = [candidates[k] for k in picked]
    entries = tuple((sel, determinant(path_matrix(p, sel, d))) for sel in candidates)
    return ScanResult(p, entries)
