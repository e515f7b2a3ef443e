"""Weight-preserving bijections between the Andrews class A and the class D.

T maps A''_r = A_{r-1,r-1} + A'_r onto A_{r,r-1}; A'_r holds the partitions
with exactly r-1 Durfee squares and a box right of some square's corner.
For i = 1 the vertical rectangles of A_{r,1} are turned on their side, and
for i = r the two classes coincide.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import accumulate

from .classes import check_params, in_A, in_D
from .dissection import H, V, andrews_plan, dissect, squares
from .partitions import Partition


@dataclass(frozen=True)
class SquareMarks:
    sizes: tuple[int, ...]
    A_set: frozenset[int]

    @property
    def m(self) -> int | None:
        return min(self.A_set) if self.A_set else None

    @property
    def M(self) -> int | None:
        return max(self.A_set) if self.A_set else None


@dataclass(frozen=True)
class RectMarks:
    sizes: tuple[int, ...]
    rect: int
    F_set: frozenset[int]

    @property
    def M_prime(self) -> int | None:
        return max(self.F_set) if self.F_set else None


def marks_A(lam: Partition) -> SquareMarks:
    """A = {j : lambda_{N_j} > n_j}, N_j the row of the j-th square's bottom."""
    sizes = squares(lam).majors
    ends = list(accumulate(sizes))
    A = frozenset(j for j, (n, e) in enumerate(zip(sizes, ends), start=1)
                  if lam.part(e) > n)
    return SquareMarks(tuple(sizes), A)


def _square_rect(mu: Partition, r: int):
    return dissect(mu, andrews_plan(r, r - 1))


def in_F(mu: Partition, r: int) -> bool:
    """F_{r-1}: A_{r,r-1} members with r-2 squares and a nonempty vertical rectangle."""
    if not in_A(mu, r, r - 1):
        return False
    return _square_rect(mu, r).blocks[-1].rows > 0


def marks_F(mu: Partition, r: int) -> RectMarks:
    if not in_F(mu, r):
        raise ValueError(f"{mu} is not in F[{r - 1}]")
    d = _square_rect(mu, r)
    sizes = tuple(b.major for b in d.blocks[:-1])
    rect = d.blocks[-1].width
    ends = list(accumulate(sizes))
    F = frozenset(j for j, (n, e) in enumerate(zip(sizes, ends), start=1)
                  if mu.part(e + 1) < n)
    return RectMarks(sizes, rect, F)


def in_A_prime(lam: Partition, r: int) -> bool:
    if not in_A(lam, r, r):
        return False
    mk = marks_A(lam)
    return len(mk.sizes) == r - 1 and bool(mk.A_set)


def in_A_smaller(lam: Partition, r: int) -> bool:
    """A_{r-1,r-1}; for r = 2 this is just the empty partition."""
    return in_A(lam, r - 1, r - 1)


def in_A_double_prime(lam: Partition, r: int) -> bool:
    return in_A_smaller(lam, r) or in_A_prime(lam, r)


class Branch(enum.Enum):
    IDENTITY = "identity"
    LAST = "last"        # F nonempty, M' = r-2  <->  M = r-1
    MIDDLE = "middle"    # F nonempty, 1 <= M' <= r-3  <->  M = M'+1
    FIRST = "first"      # F empty  <->  M = 1


def T_map(lam: Partition, r: int) -> Partition:
    check_params(r, r - 1 if r > 1 else 1)
    if in_A_smaller(lam, r):
        return lam
    if not in_A_prime(lam, r):
        raise ValueError(f"{lam} is not in A''[{r}]")
    mk = marks_A(lam)
    M = mk.M
    sizes = mk.sizes
    start = sum(sizes[:M - 1])
    end = start + sizes[M - 1]
    parts = list(lam)
    out = parts[:start] + [v - 1 for v in parts[start:end]] + [sizes[M - 1]] + parts[end:]
    return Partition(out)


def T_inv_branch(mu: Partition, r: int) -> Branch:
    if in_A_smaller(mu, r):
        return Branch.IDENTITY
    mk = marks_F(mu, r)
    if not mk.F_set:
        return Branch.FIRST
    if mk.M_prime == r - 2:
        return Branch.LAST
    return Branch.MIDDLE


def T_inv(mu: Partition, r: int) -> Partition:
    check_params(r, r - 1 if r > 1 else 1)
    if in_A_smaller(mu, r):
        return mu
    if not in_A(mu, r, r - 1):
        raise ValueError(f"{mu} is not in A[{r},{r - 1}]")
    mk = marks_F(mu, r)
    parts = list(mu)
    sizes = mk.sizes
    ends = list(accumulate(sizes))
    if not mk.F_set:
        n1 = sizes[0] if sizes else mk.rect
        out = [v + 1 for v in parts[:n1]] + parts[n1 + 1:]
    elif mk.M_prime == r - 2:
        base = ends[-1]
        body = parts[:-1]
        out = body[:base] + [v + 1 for v in body[base:base + mk.rect]] + body[base + mk.rect:]
    else:
        mp = mk.M_prime
        lo, hi = ends[mp - 1], ends[mp]
        out = parts[:lo] + [v + 1 for v in parts[lo:hi]] + parts[hi + 1:]
    return Partition(out)


# ------------------------------------------------------------- i = 1 and i = r

class Direction(enum.Enum):
    A_TO_D = "A->D"
    D_TO_A = "D->A"


def _rebuild(blocks) -> Partition:
    rows = []
    for width, nrows, side, tail in blocks:
        s = list(side) + [0] * (nrows - len(side))
        rows.extend(width + x for x in s)
        rows.extend(tail)
    return Partition(rows)


def rotate_simple(lam: Partition, r: int, direction: Direction, i: int = 1) -> Partition:
    """i = 1: quarter-turn every rectangle; i = r: identity."""
    if i == r:
        src = in_A if direction is Direction.A_TO_D else in_D
        if not src(lam, r, r):
            raise ValueError(f"{lam} is not in the source class")
        return lam
    if i != 1:
        raise ValueError("only i = 1 and i = r have the simple bijection")
    if direction is Direction.A_TO_D:
        if not in_A(lam, r, 1):
            raise ValueError(f"{lam} is not in A[{r},1]")
        d = dissect(lam, [V] * (r - 1))
        # n columns by n+1 rows, last row exactly n  ->  n+1 columns by n rows
        blocks = [(b.width + 1, b.width, b.side, ()) for b in d.blocks if b.rows]
        out = _rebuild(blocks)
        if not in_D(out, r, 1):
            raise RuntimeError(f"rotation of {lam} left D[{r},1]")
        return out
    if not in_D(lam, r, 1):
        raise ValueError(f"{lam} is not in D[{r},1]")
    d = dissect(lam, [H] * (r - 1))
    blocks = [(b.height, b.height, b.side, (b.height,)) for b in d.blocks if b.rows]
    out = _rebuild(blocks)
    if not in_A(out, r, 1):
        raise RuntimeError(f"rotation of {lam} left A[{r},1]")
    return out
