"""The six partition families T, E, A, B, C, D and their counts.

T   gap condition lambda_j - lambda_{j+r-1} >= 2, at most i-1 ones
E   no part congruent to 0, +-i modulo 2r+1
A   vertical (i-1)-Durfee dissection, rectangles below the (r-1)-th empty,
    bottom row of every nonempty rectangle is a part
B   (i-1)-bottom dissection exits after r-1 blocks
C   new-parts condition
D   (r-i)-Durfee dissection exits after r-1 blocks
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .dissection import (
    BlockKind,
    andrews_plan,
    bottom_dissect,
    bottom_plan,
    dissect,
    durfee_plan,
)
from .partitions import Partition, partitions_of

CLASS_NAMES = ("T", "E", "A", "B", "C", "D")


def check_params(r: int, i: int, min_r: int = 2) -> None:
    if r < min_r:
        raise ValueError(f"r must be >= {min_r}, got {r}")
    if not 1 <= i <= r:
        raise ValueError(f"i must satisfy 1 <= i <= r, got i={i}, r={r}")


@dataclass(frozen=True)
class ClassId:
    name: str
    r: int
    i: int

    def __post_init__(self):
        if self.name not in CLASS_NAMES:
            raise ValueError(f"unknown class {self.name!r}")
        # A, B, D make sense for r = 1 (only the empty partition survives)
        check_params(self.r, self.i, min_r=1 if self.name in "ABD" else 2)

    def __str__(self) -> str:
        return f"{self.name}[{self.r},{self.i}]"


@dataclass(frozen=True)
class NewParts:
    values: tuple[int, ...]

    @property
    def count(self) -> int:
        return sum(1 for v in self.values if v)


def new_parts(lam: Partition, r: int, i: int) -> NewParts:
    """The (i, l)-new parts p_{i,1}, ..., p_{i,r-1} of ``lam``."""
    check_params(r, i)
    s = len(lam)
    vals: list[int] = []
    total = 0
    for ell in range(1, r):
        if vals and vals[-1] == 0:
            vals.append(0)
            continue
        if ell == 1:
            idx = s
        elif ell <= i:
            idx = s - total
        else:
            idx = s + ell - i - total
        v = lam.part(idx)
        vals.append(v)
        total += v
    return NewParts(tuple(vals))


def in_T(lam: Partition, r: int, i: int) -> bool:
    if lam.multiplicity(1) > i - 1:
        return False
    gap = r - 1
    return all(lam[j] - lam[j + gap] >= 2 for j in range(len(lam) - gap))


def in_E(lam: Partition, r: int, i: int) -> bool:
    mod = 2 * r + 1
    bad = {0, i % mod, (-i) % mod}
    return all(v % mod not in bad for v in lam)


def in_A(lam: Partition, r: int, i: int) -> bool:
    if r == 1:
        return not lam
    d = dissect(lam, andrews_plan(r, i))
    if d.residual:
        return False
    for b in d.blocks:
        if b.kind is BlockKind.VERTICAL_RECT and b.rows:
            if lam[b.first_row + b.rows - 1] != b.width:
                return False
    return True


def in_B(lam: Partition, r: int, i: int) -> bool:
    if r == 1:
        return not lam
    return not bottom_dissect(lam, bottom_plan(r, i)).residual


def in_C(lam: Partition, r: int, i: int) -> bool:
    if lam.multiplicity(1) > i - 1:
        return False
    p = new_parts(lam, r, i)
    if p.count < r - 1:
        return True
    return len(lam) <= sum(p.values) - (r - i)


def in_D(lam: Partition, r: int, i: int) -> bool:
    if r == 1:
        return not lam
    return not dissect(lam, durfee_plan(r, i)).residual


_PREDICATES = {"T": in_T, "E": in_E, "A": in_A, "B": in_B, "C": in_C, "D": in_D}


def predicate(name: str):
    return _PREDICATES[name]


def member(c: ClassId, lam: Partition) -> bool:
    return _PREDICATES[c.name](lam, c.r, c.i)


def count(c: ClassId, n: int) -> int:
    pred = _PREDICATES[c.name]
    return sum(1 for lam in partitions_of(n) if pred(lam, c.r, c.i))


def members(c: ClassId, n: int) -> frozenset[Partition]:
    pred = _PREDICATES[c.name]
    return frozenset(lam for lam in partitions_of(n) if pred(lam, c.r, c.i))


def in_D_ext(lam: Partition, r: int, i: int) -> bool:
    """D_{r,i} with D_{r,i} := D_{r,r} for i > r."""
    return in_D(lam, r, min(i, r))


class Transition(enum.Enum):
    IN_SMALLER = "InSmaller"
    CASE1 = "TransitionCase1"
    CASE2 = "TransitionCase2"
    CASE3 = "TransitionCase3"
    RECTANGLES_ONLY = "TransitionRectangles"
    SQUARES_ONLY = "TransitionSquares"
    OUTSIDE = "Outside"

    @property
    def is_transition(self) -> bool:
        return self not in (Transition.IN_SMALLER, Transition.OUTSIDE)


def classify_transition(lam: Partition, r: int, i: int) -> Transition:
    """Place ``lam`` relative to D_{r,i} minus D_{r-1,i} by shape alone.

    Transition members have exactly r-i rectangles of positive height and
    i-1 nonempty squares in their (r-i)-Durfee dissection; for 2 <= i <= r-1
    one of three further conditions on the square tops must hold.
    """
    check_params(r, i)
    d = dissect(lam, durfee_plan(r, i))
    if d.residual:
        return Transition.OUTSIDE
    blocks = d.blocks
    full = all(b.rows > 0 for b in blocks)
    if i == 1:
        return Transition.RECTANGLES_ONLY if full else Transition.IN_SMALLER
    if i == r:
        return Transition.SQUARES_ONLY if full else Transition.IN_SMALLER
    if not full:
        return Transition.IN_SMALLER

    nrect = r - i
    sq = blocks[nrect:]
    d_last_rect = blocks[nrect - 1].height
    # S_lambda: squares whose top row is shorter than the block above it
    # (previous square size, or rectangle height + 1 for the first square)
    marked = []
    for j, b in enumerate(sq, start=1):
        above = d_last_rect + 1 if j == 1 else sq[j - 2].major
        if lam[b.first_row] < above:
            marked.append(j)
    if not marked:
        if sq[-1].major > 1:
            return Transition.CASE1
        return Transition.IN_SMALLER
    m = marked[0]
    if m == 1:
        return Transition.CASE2
    if m <= i - 1 and sq[m - 2].major > 1:
        return Transition.CASE3
    return Transition.IN_SMALLER
