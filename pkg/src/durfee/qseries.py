"""Exact power series in q truncated at a fixed order.

Coefficients are Python ints, so nothing overflows. A series of order N
knows its coefficients of q^0 .. q^N; every operation keeps the minimum
order of its operands.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Iterable, Sequence


class TruncatedSeries:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int], order: int | None = None):
        c = [int(x) for x in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("order must be nonnegative")
            if len(c) <= order:
                c.extend([0] * (order + 1 - len(c)))
            else:
                del c[order + 1:]
        if not c:
            raise ValueError("a series needs at least the constant coefficient")
        self.coeffs = tuple(c)

    # construction helpers
    @classmethod
    def zero(cls, order: int) -> TruncatedSeries:
        return cls((), order)

    @classmethod
    def one(cls, order: int) -> TruncatedSeries:
        return cls((1,), order)

    @classmethod
    def monomial(cls, power: int, order: int, coeff: int = 1) -> TruncatedSeries:
        if power < 0:
            raise ValueError("negative powers of q are not representable")
        c = [0] * (order + 1)
        if power <= order:
            c[power] = coeff
        return cls(c)

    @classmethod
    def from_terms(cls, terms: dict[int, int], order: int) -> TruncatedSeries:
        c = [0] * (order + 1)
        for k, v in terms.items():
            if k < 0:
                raise ValueError("negative powers of q are not representable")
            if k <= order:
                c[k] += v
        return cls(c)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def valuation(self) -> int | None:
        for k, v in enumerate(self.coeffs):
            if v:
                return k
        return None

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return TruncatedSeries(self.coeffs[:order + 1])

    # arithmetic
    def _coerce(self, other) -> TruncatedSeries:
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, int):
            return TruncatedSeries((other,), self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = min(self.order, other.order) + 1
        a, b = self.coeffs, other.coeffs
        return TruncatedSeries([a[k] + b[k] for k in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-x for x in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return TruncatedSeries([other * x for x in self.coeffs])
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [0] * (n + 1)
        for i in range(n + 1):
            ai = a[i]
            if ai:
                for j in range(n + 1 - i):
                    bj = b[j]
                    if bj:
                        out[i + j] += ai * bj
        return TruncatedSeries(out)

    __rmul__ = __mul__

    def shift(self, power: int) -> TruncatedSeries:
        """Multiply by q**power, keeping the order."""
        if power < 0:
            raise ValueError("negative powers of q are not representable")
        n = self.order
        if power > n:
            return TruncatedSeries.zero(n)
        return TruncatedSeries((0,) * power + self.coeffs[:n + 1 - power])

    def inverse(self) -> TruncatedSeries:
        c0 = self.coeffs[0]
        if c0 not in (1, -1):
            raise ZeroDivisionError("only series with constant term +-1 are inverted")
        n = self.order
        a = self.coeffs
        out = [0] * (n + 1)
        out[0] = c0
        for k in range(1, n + 1):
            acc = 0
            for j in range(1, k + 1):
                if a[j]:
                    acc += a[j] * out[k - j]
            out[k] = -acc * c0
        return TruncatedSeries(out)

    def __truediv__(self, other):
        if isinstance(other, int):
            if other not in (1, -1):
                raise ZeroDivisionError("exact division by integers other than +-1")
            return self * other
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        if isinstance(other, int):
            return self.inverse() * other
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, int):
            other = TruncatedSeries((other,), self.order)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order) + 1
        return self.coeffs[:n] == other.coeffs[:n]

    def __hash__(self):
        return hash(self.coeffs)

    def first_mismatch(self, other: TruncatedSeries):
        """(power, self_coeff, other_coeff) of the lowest differing term, or None."""
        n = min(self.order, other.order) + 1
        for k in range(n):
            if self.coeffs[k] != other.coeffs[k]:
                return (k, self.coeffs[k], other.coeffs[k])
        return None

    # output
    def to_json(self) -> list[str]:
        return [str(x) for x in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> TruncatedSeries:
        return cls(int(x) for x in data)

    def __str__(self) -> str:
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = abs(c)
            if k == 0:
                term = str(mag)
            else:
                q = "q" if k == 1 else f"q^{k}"
                term = q if mag == 1 else f"{mag}*{q}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(("+ " if c > 0 else "- ") + term)
        body = " ".join(parts) if parts else "0"
        return f"{body} + O(q^{self.order + 1})"

    def __repr__(self) -> str:
        return f"TruncatedSeries({list(self.coeffs)!r})"


def series_sum(terms: Iterable[TruncatedSeries], order: int) -> TruncatedSeries:
    acc = [0] * (order + 1)
    for t in terms:
        c = t.coeffs
        for k in range(min(order, t.order) + 1):
            if c[k]:
                acc[k] += c[k]
    return TruncatedSeries(acc)


INF = math.inf


def poch(start_exp: int, step: int, count, order: int) -> TruncatedSeries:
    """(q^start; q^step)_count truncated at q^order; ``count`` may be ``INF``."""
    if start_exp < 1:
        raise ValueError("start exponent must be >= 1 (the product would vanish)")
    if step < 1:
        raise ValueError("step must be positive")
    if count != INF and count < 0:
        raise ValueError("negative counts are not supported")
    c = [0] * (order + 1)
    c[0] = 1
    k = 0
    while count == INF or k < count:
        e = start_exp + k * step
        if e > order:
            break
        # multiply in place by (1 - q^e)
        for m in range(order, e - 1, -1):
            c[m] -= c[m - e]
        k += 1
    return TruncatedSeries(c)


@lru_cache(maxsize=4096)
def qfac(k: int, order: int) -> TruncatedSeries:
    """(q;q)_k."""
    return poch(1, 1, k, order)


@lru_cache(maxsize=4096)
def inv_qfac(k: int, order: int) -> TruncatedSeries:
    """1/(q;q)_k, which is 0 for negative k since (q;q)_k has a pole there."""
    if k < 0:
        return TruncatedSeries.zero(order)
    return qfac(k, order).inverse()


@lru_cache(maxsize=4096)
def inv_q2fac(k: int, order: int) -> TruncatedSeries:
    """1/(q^2;q^2)_k."""
    if k < 0:
        return TruncatedSeries.zero(order)
    return poch(2, 2, k, order).inverse()


@lru_cache(maxsize=None)
def gaussian_binomial(n: int, k: int) -> tuple[int, ...]:
    """Full coefficient list of the Gaussian binomial [n choose k]_q."""
    if k < 0 or k > n:
        return (0,)
    if k == 0 or k == n:
        return (1,)
    # [n,k] = [n-1,k-1] + q^k [n-1,k]
    a = gaussian_binomial(n - 1, k - 1)
    b = gaussian_binomial(n - 1, k)
    out = [0] * (k * (n - k) + 1)
    for j, v in enumerate(a):
        out[j] += v
    for j, v in enumerate(b):
        out[j + k] += v
    return tuple(out)


@lru_cache(maxsize=4096)
def qbinom(n: int, k: int, order: int) -> TruncatedSeries:
    return TruncatedSeries(gaussian_binomial(n, k), order)


def bilateral_theta(z_exp: int, q_step: int, order: int) -> TruncatedSeries:
    """sum over all integers j of (-1)^j z^j q^(j(j-1)/2) with q -> q^step, z = q^z_exp."""
    if q_step < 1:
        raise ValueError("q_step must be positive")
    if z_exp < 0 or z_exp > q_step:
        raise ValueError("z_exp outside [0, q_step] produces negative powers of q")
    c = [0] * (order + 1)

    def expo(j):
        return q_step * j * (j - 1) // 2 + z_exp * j

    for direction in (1, -1):
        j = 0 if direction == 1 else -1
        while True:
            e = expo(j)
            if e > order:
                # exponents are convex in j; once past the vertex they only grow
                if (direction == 1 and j >= 1) or (direction == -1):
                    break
            else:
                c[e] += -1 if j % 2 else 1
            j += direction
    return TruncatedSeries(c)


def triple_product(a: int, modulus: int, order: int) -> TruncatedSeries:
    """(q^M, q^a, q^(M-a); q^M)_inf for 1 <= a <= M-1."""
    if not 1 <= a <= modulus - 1:
        raise ValueError(f"residue {a} outside 1..{modulus - 1}")
    return (poch(modulus, modulus, INF, order) * poch(a, modulus, INF, order)
            * poch(modulus - a, modulus, INF, order))


def restricted_parts(allowed, order: int) -> TruncatedSeries:
    """prod over allowed k <= order of 1/(1 - q^k)."""
    c = [0] * (order + 1)
    c[0] = 1
    for k in range(1, order + 1):
        if allowed(k):
            for m in range(k, order + 1):
                c[m] += c[m - k]
    return TruncatedSeries(c)
