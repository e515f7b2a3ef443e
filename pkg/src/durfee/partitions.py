"""Integer partitions as immutable weakly decreasing tuples."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator


class PartitionError(ValueError):
    pass


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Construction validates but never sorts. ``part(j)`` is the 1-based
    accessor and returns 0 for any ``j`` outside ``1..length``.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(parts)
        prev = None
        for k, v in enumerate(parts):
            if not isinstance(v, int) or isinstance(v, bool):
                raise PartitionError(f"part {k + 1} is not an integer: {v!r}")
            if v <= 0:
                raise PartitionError(f"part {k + 1} is not positive: {v}")
            if prev is not None and v > prev:
                raise PartitionError(
                    f"parts not weakly decreasing at position {k + 1}: {prev} < {v}")
            prev = v
        return super().__new__(cls, parts)

    @classmethod
    def _trusted(cls, parts) -> Partition:
        # internal fast path for sequences already known to be valid
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, j: int) -> int:
        if 1 <= j <= len(self):
            return self[j - 1]
        return 0

    def multiplicity(self, value: int) -> int:
        return tuple.count(self, value)

    def __repr__(self) -> str:
        return f"Partition({format_partition(self)})"

    def __str__(self) -> str:
        return format_partition(self)


EMPTY = Partition()


def make_partition(values: Iterable[int]) -> Partition:
    return Partition(values)


def format_partition(lam: Iterable[int]) -> str:
    lam = tuple(lam)
    return ",".join(str(v) for v in lam) if lam else "-"


def parse_partition(text: str) -> Partition:
    """Parse ``"6,5,5,4,3"``; ``"-"`` or an empty string is the empty partition."""
    text = text.strip()
    if text in ("", "-"):
        return EMPTY
    try:
        values = [int(tok) for tok in text.replace(" ", "").split(",")]
    except ValueError as exc:
        raise PartitionError(f"malformed partition string {text!r}") from exc
    return Partition(values)


def enumerate_partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Yield every partition of ``n`` in reverse-lexicographic order.

    For n = 4 this is (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
    """
    if n < 0:
        raise PartitionError("n must be nonnegative")
    if max_part is None or max_part > n:
        max_part = n
    if n == 0:
        yield EMPTY
        return
    parts: list[int] = []

    def rec(remaining: int, cap: int) -> Iterator[Partition]:
        if remaining == 0:
            yield Partition._trusted(parts)
            return
        for v in range(min(cap, remaining), 0, -1):
            parts.append(v)
            yield from rec(remaining - v, v)
            parts.pop()

    yield from rec(n, max_part)


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """Cached tuple of all partitions of ``n`` (same order as the generator)."""
    return tuple(enumerate_partitions(n))


def conjugate(lam: Iterable[int]) -> Partition:
    lam = tuple(lam)
    if not lam:
        return EMPTY
    return Partition._trusted(
        tuple(sum(1 for v in lam if v > c) for c in range(lam[0])))


def partition_count(n: int) -> int:
    """p(n) via Euler's pentagonal recurrence."""
    if n < 0:
        return 0
    p = [1] + [0] * n
    for m in range(1, n + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[m - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return p[n]
