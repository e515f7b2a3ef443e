"""Durfee-style dissections of Young diagrams.

Top-anchored blocks (squares, vertical and horizontal rectangles) are drawn
top-down, each on the rows left below the previous block. Bottom-anchored
blocks are drawn bottom-up, each as wide as the lowest uncovered row.
Exactly ``max_blocks`` blocks are always drawn; once the partition is
exhausted the remaining blocks are empty.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .partitions import Partition


class BlockKind(enum.Enum):
    SQUARE = "S"
    VERTICAL_RECT = "V"
    HORIZONTAL_RECT = "H"
    BOTTOM_SQUARE = "b"
    BOTTOM_RECT = "B"

    @property
    def top_anchored(self) -> bool:
        return self in (BlockKind.SQUARE, BlockKind.VERTICAL_RECT,
                        BlockKind.HORIZONTAL_RECT)

    def width(self, major: int) -> int:
        if major == 0:
            return 0
        if self is BlockKind.VERTICAL_RECT:
            return major - 1
        return major

    def height(self, major: int) -> int:
        if major == 0:
            return 0
        if self in (BlockKind.HORIZONTAL_RECT, BlockKind.BOTTOM_RECT):
            return major - 1
        return major

    @classmethod
    def from_letter(cls, letter: str) -> BlockKind:
        for kind in cls:
            if kind.value == letter:
                return kind
        raise ValueError(f"unknown block letter {letter!r} (use S, V, H, b, B)")


S, V, H = BlockKind.SQUARE, BlockKind.VERTICAL_RECT, BlockKind.HORIZONTAL_RECT
BS, BR = BlockKind.BOTTOM_SQUARE, BlockKind.BOTTOM_RECT


@dataclass(frozen=True)
class DissectionBlock:
    """One block of a dissection.

    ``major`` is the larger side. Heights are row offsets with the bottom of
    the lowest row at 0; a bottom block may poke out above the partition, so
    ``top_height`` can exceed the length. ``rows`` counts the partition rows
    actually covered and ``first_row`` is the 0-based index (from the top) of
    the highest covered row.
    """

    kind: BlockKind
    major: int
    empty: bool
    bottom_height: int
    top_height: int
    rows: int
    first_row: int
    side: Partition

    @property
    def width(self) -> int:
        return self.kind.width(self.major)

    @property
    def height(self) -> int:
        return self.kind.height(self.major)

    @property
    def minor(self) -> int:
        return min(self.width, self.height)


@dataclass(frozen=True)
class Dissection:
    partition: Partition
    blocks: tuple[DissectionBlock, ...]
    residual: Partition
    top_down: bool

    @property
    def residual_rows(self) -> int:
        return len(self.residual)

    @property
    def majors(self) -> tuple[int, ...]:
        return tuple(b.major for b in self.blocks)

    def nonempty(self) -> tuple[DissectionBlock, ...]:
        return tuple(b for b in self.blocks if not b.empty)


def largest_fitting(lam: Sequence[int], kind: BlockKind) -> int:
    """Side parameter of the largest block of ``kind`` at the top-left corner."""
    if not kind.top_anchored:
        raise ValueError(f"{kind.name} is read from the smallest part, not fitted")
    s = len(lam)
    if s == 0:
        return 0
    k = 0
    if kind is S:
        while k < s and lam[k] >= k + 1:
            k += 1
    elif kind is V:
        # k rows, k - 1 columns
        while k < s and lam[k] >= k:
            k += 1
    else:
        # k columns, k - 1 rows; the 1 x 0 rectangle always fits
        k = 1
        while k <= s and lam[k - 1] >= k + 1:
            k += 1
    return k


def _check_plan(plan: Sequence[BlockKind], max_blocks: int, top: bool) -> None:
    if max_blocks < 1:
        raise ValueError("max_blocks must be positive")
    if len(plan) != max_blocks:
        raise ValueError(f"plan has {len(plan)} kinds but max_blocks={max_blocks}")
    for kind in plan:
        if kind.top_anchored != top:
            raise ValueError(f"{kind.name} cannot be used in this dissection")


def dissect(lam: Partition, plan: Sequence[BlockKind],
            max_blocks: int | None = None) -> Dissection:
    """Top-down dissection following ``plan``."""
    if max_blocks is None:
        max_blocks = len(plan)
    _check_plan(plan, max_blocks, top=True)
    s = len(lam)
    pos = 0
    blocks = []
    for kind in plan:
        rest = lam[pos:]
        k = largest_fitting(rest, kind)
        h = kind.height(k)
        w = kind.width(k)
        side = Partition._trusted(tuple(v - w for v in rest[:h] if v > w))
        blocks.append(DissectionBlock(
            kind=kind, major=k, empty=(k == 0),
            bottom_height=s - pos - h, top_height=s - pos,
            rows=h, first_row=pos, side=side))
        pos += h
    return Dissection(lam, tuple(blocks), Partition._trusted(lam[pos:]), True)


def bottom_dissect(lam: Partition, plan: Sequence[BlockKind],
                   max_blocks: int | None = None) -> Dissection:
    """Bottom-up dissection following ``plan`` (bottom squares / rectangles)."""
    if max_blocks is None:
        max_blocks = len(plan)
    _check_plan(plan, max_blocks, top=False)
    s = len(lam)
    top = s  # rows lam[0:top] are still uncovered
    blocks = []
    for kind in plan:
        if top == 0:
            base = s
            blocks.append(DissectionBlock(kind, 0, True, base, base, 0, 0,
                                          Partition._trusted(())))
            continue
        w = lam[top - 1]
        h = kind.height(w)
        covered = min(h, top)
        first = top - covered
        side = Partition._trusted(tuple(v - w for v in lam[first:top] if v > w))
        base = s - top
        blocks.append(DissectionBlock(kind, w, False, base, base + h, covered,
                                      first, side))
        top = first
    return Dissection(lam, tuple(blocks), Partition._trusted(lam[:top]), False)


def reconstruct(d: Dissection) -> Partition:
    """Rebuild the partition from blocks, side partitions and residual rows."""
    chunks = []
    for b in d.blocks:
        side = list(b.side) + [0] * (b.rows - len(b.side))
        chunks.append([b.width + x for x in side])
    if d.top_down:
        rows = [v for chunk in chunks for v in chunk] + list(d.residual)
    else:
        rows = list(d.residual)
        for chunk in reversed(chunks):
            rows.extend(chunk)
    return Partition(rows)


def durfee_heights(d: Dissection) -> list[int]:
    """h_j = sum of the heights of the last j blocks (top-down dissections)."""
    out, acc = [], 0
    for b in reversed(d.blocks):
        acc += b.height
        out.append(acc)
    return out


def bottom_heights(d: Dissection) -> list[int]:
    """h_j = top of the j-th bottom block measured from the bottom row."""
    out, acc = [], 0
    for b in d.blocks:
        acc += b.height
        out.append(acc)
    return out


def squares(lam: Partition) -> Dissection:
    """Successive Durfee squares until the partition is exhausted."""
    d = dissect(lam, [S] * max(1, len(lam)))
    blocks = tuple(b for b in d.blocks if not b.empty)
    return Dissection(lam, blocks, d.residual, True)


def durfee_plan(r: int, i: int) -> list[BlockKind]:
    """r - i horizontal rectangles, then i - 1 squares."""
    return [H] * (r - i) + [S] * (i - 1)


def andrews_plan(r: int, i: int) -> list[BlockKind]:
    """i - 1 squares, then r - i vertical rectangles."""
    return [S] * (i - 1) + [V] * (r - i)


def bottom_plan(r: int, i: int) -> list[BlockKind]:
    """i - 1 bottom squares, then r - i bottom rectangles."""
    return [BS] * (i - 1) + [BR] * (r - i)


def parse_plan(text: str) -> list[BlockKind]:
    return [BlockKind.from_letter(c) for c in text.strip()]


@dataclass(frozen=True)
class Interleaving:
    """Heights of a Durfee and a bottom dissection drawn with the same block shape.

    ``durfee[j-1]`` is h^D_j and ``bottom[j-1]`` is h^B_j; callers treat h^D_r
    as infinite. ``short[j-1]`` says the side of the j-th Durfee block from
    the bottom has fewer parts than the block has rows.
    """

    durfee: tuple[int, ...]
    bottom: tuple[int, ...]
    short: tuple[bool, ...]

    def chain_holds(self) -> bool:
        hd = self.durfee + (float("inf"),)
        return all(hd[j] <= self.bottom[j] < hd[j + 1] for j in range(len(self.bottom)))

    def equality_holds(self) -> bool:
        """h^D_j = h^B_j exactly when the first j Durfee sides from the bottom are short."""
        return all((self.durfee[j] == self.bottom[j]) == all(self.short[:j + 1])
                   for j in range(len(self.bottom)))

    def holds(self) -> bool:
        return self.chain_holds() and self.equality_holds()


def interleaving(lam: Partition, r: int, kind: BlockKind) -> Interleaving | None:
    """Compare h^D and h^B for the all-squares (S) or all-rectangles (H) plan.

    Applies when lam fills exactly r - 1 nonempty Durfee blocks of positive
    height; rectangles additionally need every part > 1. Returns None otherwise.
    """
    if kind not in (S, H):
        raise ValueError("interleaving compares all-S or all-H plans")
    if r < 2:
        raise ValueError("need r >= 2")
    if kind is H and lam and lam[-1] == 1:
        return None
    d = dissect(lam, [kind] * (r - 1))
    if d.residual or any(b.rows == 0 for b in d.blocks):
        return None
    b = bottom_dissect(lam, [BS if kind is S else BR] * (r - 1))
    short = tuple(len(x.side) < x.rows for x in reversed(d.blocks))
    return Interleaving(tuple(durfee_heights(d)), tuple(bottom_heights(b)), short)
