"""Partitions and their Young diagrams.

Boxes are indexed matrix-wise and 1-based: row ``i`` counts downward,
column ``j`` counts rightward, and ``(i, j)`` is a box iff ``j <= parts[i-1]``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple, Sequence


class PartitionError(ValueError):
    pass


class BoxCoord(NamedTuple):
    row: int
    col: int

    def __repr__(self) -> str:
        return f"({self.row},{self.col})"


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing tuple of positive parts. The empty partition is allowed."""

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        for idx, part in enumerate(parts, start=1):
            if not isinstance(part, int) or isinstance(part, bool):
                raise PartitionError(f"part {idx} is not an integer: {part!r}")
            if part < 1:
                raise PartitionError(f"part {idx} is not positive: {part}")
            if idx > 1 and part > parts[idx - 2]:
                raise PartitionError(
                    f"part {idx} ({part}) exceeds part {idx - 1} ({parts[idx - 2]})"
                )
        object.__setattr__(self, "parts", parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __bool__(self) -> bool:
        return bool(self.parts)

    def __repr__(self) -> str:
        return f"Partition{self.parts}" if len(self.parts) != 1 else f"Partition({self.parts[0]})"

    def __str__(self) -> str:
        return format_partition(self)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def num_cols(self) -> int:
        return self.parts[0] if self.parts else 0

    def row_length(self, i: int) -> int:
        """λ_i, with 0 for rows past the end."""
        if i < 1:
            raise IndexError(f"row index must be >= 1, got {i}")
        return self.parts[i - 1] if i <= len(self.parts) else 0

    def col_height(self, j: int) -> int:
        """λ'_j, the number of rows of length at least j."""
        if j < 1:
            raise IndexError(f"column index must be >= 1, got {j}")
        return sum(1 for part in self.parts if part >= j)

    def foot(self, j: int) -> BoxCoord:
        """Lowest box of column j."""
        h = self.col_height(j)
        if h == 0:
            raise PartitionError(f"column {j} is not in the diagram")
        return BoxCoord(h, j)

    def row_end(self, i: int) -> BoxCoord:
        """Rightmost box of row i."""
        w = self.row_length(i)
        if w == 0:
            raise PartitionError(f"row {i} is not in the diagram")
        return BoxCoord(i, w)

    def boxes(self) -> Iterator[BoxCoord]:
        for i, part in enumerate(self.parts, start=1):
            for j in range(1, part + 1):
                yield BoxCoord(i, j)

    def is_self_conjugate(self) -> bool:
        return conjugate(self) == self


def make_partition(parts: Sequence[int]) -> Partition:
    return Partition(tuple(parts))


def parse_partition(text: str) -> Partition:
    """Parse ``"5,4,3,3"``; the empty (or blank) string is the empty partition."""
    text = text.strip()
    if not text:
        return Partition()
    try:
        parts = [int(tok) for tok in text.split(",")]
    except ValueError as exc:
        raise PartitionError(f"cannot parse partition {text!r}: {exc}") from None
    return make_partition(parts)


def format_partition(p: Partition) -> str:
    return ",".join(str(part) for part in p.parts)


def conjugate(p: Partition) -> Partition:
    return Partition(tuple(p.col_height(j) for j in range(1, p.num_cols + 1)))


def durfee(p: Partition) -> int:
    n = 0
    while n < len(p.parts) and p.parts[n] >= n + 1:
        n += 1
    return n


def contains_box(p: Partition, b: tuple[int, int]) -> bool:
    row, col = b
    return row >= 1 and col >= 1 and col <= p.row_length(row)


def truncate(p: Partition, drop_rows: int, drop_cols: int) -> Partition:
    """Remove the first ``drop_rows`` rows and the first ``drop_cols`` columns."""
    if drop_rows < 0 or drop_cols < 0:
        raise PartitionError("truncation amounts must be non-negative")
    if drop_rows > len(p.parts):
        raise PartitionError(
            f"cannot drop {drop_rows} rows from a partition with {len(p.parts)} rows"
        )
    kept = (part - drop_cols for part in p.parts[drop_rows:])
    return Partition(tuple(part for part in kept if part > 0))


def _partitions_of(n: int, max_part: int) -> Iterator[tuple[int, ...]]:
    # lexicographically descending
    if n == 0:
        yield ()
        return
    for head in range(min(n, max_part), 0, -1):
        for tail in _partitions_of(n - head, head):
            yield (head,) + tail


def enumerate_partitions(max_cells: int) -> Iterator[Partition]:
    """All partitions with at most ``max_cells`` boxes, by size then descending parts."""
    if max_cells < 0:
        raise PartitionError("max_cells must be >= 0")
    for n in range(max_cells + 1):
        for parts in _partitions_of(n, n):
            yield Partition(parts)
