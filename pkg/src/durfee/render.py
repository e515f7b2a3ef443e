"""Plain-text Young diagrams with dissection blocks marked by their letter."""

from __future__ import annotations

from .dissection import Dissection
from .partitions import Partition

SIDE = "."
REST = "o"


def diagram(lam: Partition, d: Dissection | None = None) -> list[str]:
    """One string per row. Block cells carry the block letter, others '.' or 'o'."""
    if not lam:
        return ["(empty)"]
    grid = [[REST] * v for v in lam]
    if d is not None:
        for b in d.blocks:
            for row in range(b.first_row, b.first_row + b.rows):
                for col in range(len(grid[row])):
                    grid[row][col] = b.kind.value if col < b.width else SIDE
    return ["".join(row) for row in grid]


def side_by_side(left: list[str], right: list[str], gap: int = 4,
                 titles: tuple[str, str] | None = None) -> list[str]:
    if titles:
        left = [titles[0]] + left
        right = [titles[1]] + right
    width = max(len(s) for s in left)
    rows = max(len(left), len(right))
    left = left + [""] * (rows - len(left))
    right = right + [""] * (rows - len(right))
    return [a.ljust(width + gap) + b for a, b in zip(left, right)]
