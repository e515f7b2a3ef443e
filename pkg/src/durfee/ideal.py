"""Monomials x_lambda, the ideal I_{r,i} and its quotient basis.

A partition is read as the monomial of its parts in ascending order. Besides
x_1^i, the generators of I_{r,i} are products split into r consecutive
blocks: one variable in block 1, then f(j) variables in block j, where f(j)
is the last index of block j-1 (minus one once j > i).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from .classes import check_params, classify_transition
from .dissection import durfee_plan, dissect
from .partitions import Partition


def f_val(r: int, i: int, j: int, anchor: int | None = None) -> int:
    check_params(r, i)
    if not 1 <= j <= r:
        raise ValueError(f"block index j={j} outside 1..{r}")
    if j == 1:
        return 1
    if anchor is None or anchor < 1:
        raise ValueError("f(j) for j >= 2 needs the positive anchor n_{j-1,f(j-1)}")
    return anchor if j <= i else anchor - 1


def f_sequence(r: int, i: int, anchors) -> list[int]:
    """f(1), ..., f(len(anchors)+1) from the anchors n_{1,f(1)}, n_{2,f(2)}, ..."""
    out = [1]
    for j, a in enumerate(anchors, start=2):
        if j > r:
            break
        out.append(f_val(r, i, j, a))
    return out


def f_stability_holds(r: int, i: int, anchors) -> bool:
    """f_{r,i}(j) = f_{r-1,i}(j) for i, j <= r-1, and f_{r,r} = f_{r-1,r-1} below r."""
    if r < 3:
        raise ValueError("stability compares r with r-1 >= 2")
    anchors = list(anchors)[:r - 2]
    mine = f_sequence(r, i, anchors)[:r - 1]
    other = f_sequence(r - 1, min(i, r - 1), anchors)[:r - 1]
    return mine == other


@dataclass(frozen=True)
class BlockDecomposition:
    r: int
    i: int
    blocks: tuple[tuple[int, ...], ...]
    f: tuple[int, ...]

    @property
    def ell(self) -> int:
        return len(self.blocks[-1])

    def parts(self) -> Partition:
        flat = [v for b in self.blocks for v in b]
        return Partition(sorted(flat, reverse=True))

    def to_dict(self) -> dict:
        return {"blocks": [list(b) for b in self.blocks], "f": list(self.f), "ell": self.ell}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


class NotTransitionError(ValueError):
    pass


def greedy_blocks(lam: Partition, r: int, i: int):
    """Split the ascending parts into blocks of sizes 1, f(2), f(3), ...

    Returns (blocks, f) where the last block may be partial. Stops after r
    blocks (leftover parts are dropped) or when f hits 0.
    """
    check_params(r, i)
    asc = list(reversed(lam))
    blocks, fs = [], []
    pos = 0
    for j in range(1, r + 1):
        f = 1 if j == 1 else f_val(r, i, j, blocks[-1][-1])
        fs.append(f)
        blocks.append(tuple(asc[pos:pos + f]))
        pos += len(blocks[-1])
        if len(blocks[-1]) < f or f == 0:
            break
    return blocks, fs, asc[pos:]


def generator_divides(lam: Partition, r: int, i: int) -> bool:
    """True iff x_lambda lies in I_{r,i}."""
    check_params(r, i)
    if lam.multiplicity(1) >= i:
        return True
    asc = tuple(reversed(lam))
    s = len(asc)

    @lru_cache(maxsize=None)
    def search(pos: int, j: int, left: int, last: int) -> bool:
        # filling block j with ``left`` variables still to choose
        if left == 0:
            if j == r:
                return True
            f = last if j + 1 <= i else last - 1
            if f == 0:
                # every chosen part so far is 1 and there are at least i of them
                return True
            return search(pos, j + 1, f, last)
        seen = set()
        for k in range(pos, s - left + 1):
            v = asc[k]
            if v in seen:
                continue
            seen.add(v)
            if search(k + 1, j, left - 1, v):
                return True
        return False

    return search(0, 1, 1, 0)


def in_basis(lam: Partition, r: int, i: int) -> bool:
    return not generator_divides(lam, r, i)


def _peel_height(lam: Partition, r: int, i: int) -> int:
    first = dissect(lam, durfee_plan(r, i)).blocks[0]
    return first.rows


def _decompose(lam: Partition, r: int, i: int):
    if r == 1:
        if lam:
            raise NotTransitionError("only the empty partition survives at r = 1")
        return [()], [1]
    d = _peel_height(lam, r, i)
    peeled = tuple(reversed(lam[:d]))
    blocks, fs = _decompose(Partition._trusted(lam[d:]), r - 1, min(i, r - 1))
    last = list(blocks[-1])
    need = fs[-1] - len(last)
    if d < need:
        raise NotTransitionError(f"block {r - 1} cannot be completed")
    last.extend(peeled[:need])
    blocks[-1] = tuple(last)
    rest = peeled[need:]
    f_r = f_val(r, i, r, blocks[-1][-1])
    if len(rest) >= f_r:
        raise NotTransitionError(f"block {r} would be complete")
    return blocks + [rest], fs + [f_r]


def block_decompose(lam: Partition, r: int, i: int) -> BlockDecomposition:
    """Recursive peeling of a member of D_{r,i} minus D_{r-1,i}."""
    check_params(r, i)
    if not classify_transition(lam, r, i).is_transition:
        raise NotTransitionError(f"{lam} is not in D[{r},{i}] minus D[{r - 1},{i}]")
    blocks, fs = _decompose(lam, r, i)
    return BlockDecomposition(r, i, tuple(tuple(b) for b in blocks), tuple(fs))


def star_holds(lam: Partition, dec: BlockDecomposition) -> bool:
    """ell < d_1 <= f(r-1) + ell for the height d_1 of the first block."""
    d1 = _peel_height(lam, dec.r, dec.i)
    return dec.ell < d1 <= dec.f[dec.r - 2] + dec.ell
