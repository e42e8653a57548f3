"""Monotone north/east lattice paths inside a Young diagram.

A path is a sequence of boxes in which each step goes north (row - 1) or
east (col + 1). ``D[i][j]`` counts the paths from the foot of column ``j``
to the end of row ``i``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator

from .partition import BoxCoord, Partition, PartitionError, contains_box

DEFAULT_PATH_LIMIT = 10**6


class PathLimitExceeded(RuntimeError):
    """Raised when a path enumeration would produce more paths than allowed."""

    def __init__(self, limit: int):
        super().__init__(f"path enumeration limit exceeded ({limit} paths)")
        self.limit = limit


@dataclass(frozen=True)
class LatticePath:
    boxes: tuple[BoxCoord, ...]

    def __post_init__(self) -> None:
        boxes = tuple(BoxCoord(*b) for b in self.boxes)
        if not boxes:
            raise ValueError("a lattice path has at least one box")
        for a, b in zip(boxes, boxes[1:]):
            north = b.row == a.row - 1 and b.col == a.col
            east = b.row == a.row and b.col == a.col + 1
            if not (north or east):
                raise ValueError(f"illegal step {a} -> {b}")
        object.__setattr__(self, "boxes", boxes)

    def __len__(self) -> int:
        return len(self.boxes)

    def __iter__(self) -> Iterator[BoxCoord]:
        return iter(self.boxes)

    @property
    def start(self) -> BoxCoord:
        return self.boxes[0]

    @property
    def end(self) -> BoxCoord:
        return self.boxes[-1]

    def steps(self) -> str:
        """Step word over {'N', 'E'}."""
        return "".join("N" if b.row < a.row else "E" for a, b in zip(self.boxes, self.boxes[1:]))

    def is_hook(self) -> bool:
        """All north steps come before all east steps."""
        return "EN" not in self.steps()

    def fits(self, p: Partition) -> bool:
        return all(contains_box(p, b) for b in self.boxes)


def _check_box(p: Partition, b: tuple[int, int]) -> BoxCoord:
    b = BoxCoord(*b)
    if not contains_box(p, b):
        raise PartitionError(f"box {b} is not in the diagram of {p!r}")
    return b


def count_paths(p: Partition, start: tuple[int, int], end: tuple[int, int]) -> int:
    """Number of monotone paths from ``start`` to ``end`` staying inside ``p``."""
    start, end = _check_box(p, start), _check_box(p, end)
    if end.row > start.row or end.col < start.col:
        return 0
    # Forward DP over the rectangle spanned by the two boxes; a box is
    # reachable only through its south and west neighbours.
    counts: dict[tuple[int, int], int] = {}
    for r in range(start.row, end.row - 1, -1):
        for c in range(start.col, end.col + 1):
            if c > p.row_length(r):
                break
            if (r, c) == start:
                counts[r, c] = 1
            else:
                counts[r, c] = counts.get((r + 1, c), 0) + counts.get((r, c - 1), 0)
    return counts.get(tuple(end), 0)


def enumerate_paths(
    p: Partition,
    start: tuple[int, int],
    end: tuple[int, int],
    limit: int = DEFAULT_PATH_LIMIT,
) -> list[LatticePath]:
    """Every monotone path from ``start`` to ``end``, north-first depth-first.

    Raises PathLimitExceeded rather than returning a partial list.
    """
    start, end = _check_box(p, start), _check_box(p, end)
    found: list[LatticePath] = []
    trail = [start]

    def walk(r: int, c: int) -> None:
        if (r, c) == end:
            if len(found) >= limit:
                raise PathLimitExceeded(limit)
            found.append(LatticePath(tuple(trail)))
            return
        if r - 1 >= end.row:
            trail.append(BoxCoord(r - 1, c))
            walk(r - 1, c)
            trail.pop()
        if c + 1 <= end.col and c + 1 <= p.row_length(r):
            trail.append(BoxCoord(r, c + 1))
            walk(r, c + 1)
            trail.pop()

    if end.row <= start.row and end.col >= start.col:
        walk(*start)
    return found


@dataclass(frozen=True)
class PathCountArray:
    shape: Partition
    rows: tuple[tuple[int, ...], ...]

    def __getitem__(self, box: tuple[int, int]) -> int:
        i, j = box
        if not contains_box(self.shape, (i, j)):
            raise IndexError(f"box {(i, j)} is not in the diagram of {self.shape!r}")
        return self.rows[i - 1][j - 1]

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.rows]

    def to_json(self) -> str:
        doc = {
            "shape": list(self.shape.parts),
            "rows": [[str(v) for v in row] for row in self.rows],
        }
        return json.dumps(doc)

    @classmethod
    def from_json(cls, text: str) -> "PathCountArray":
        doc = json.loads(text)
        shape = Partition(tuple(doc["shape"]))
        rows = tuple(tuple(int(v) for v in row) for row in doc["rows"])
        if tuple(len(row) for row in rows) != shape.parts:
            raise ValueError("row lengths do not match the shape")
        return cls(shape, rows)

    def to_csv(self) -> str:
        return "".join(",".join(str(v) for v in row) + "\n" for row in self.rows)

    def render(self) -> str:
        """Right-aligned text table, one diagram row per line."""
        if not self.rows:
            return ""
        width = max(len(str(v)) for row in self.rows for v in row)
        return "\n".join(" ".join(str(v).rjust(width) for v in row) for row in self.rows)


def path_count_array(p: Partition) -> PathCountArray:
    """Fill every box with D[i][j]; one backward DP per row end."""
    rows = []
    for i in range(1, len(p) + 1):
        width = p.row_length(i)
        # f[r][c] = number of paths from (r, c) to the end of row i
        f: dict[tuple[int, int], int] = {}
        for r in range(i, p.col_height(1) + 1):
            for c in range(min(width, p.row_length(r)), 0, -1):
                if r == i and c == width:
                    f[r, c] = 1
                else:
                    f[r, c] = f.get((r - 1, c), 0) + f.get((r, c + 1), 0)
        rows.append(tuple(f[p.col_height(j), j] for j in range(1, width + 1)))
    return PathCountArray(p, tuple(rows))
