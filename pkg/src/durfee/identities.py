"""Sum sides and product sides of the Rogers-Ramanujan family of identities.

Every multi-sum runs over s_1 >= ... >= s_{r-1} >= 0. All summands have
exponent at least s_1^2 - s_1 and denominators of valuation zero, so bounding
every index by the largest s with s(s-1) <= N loses nothing below q^(N+1).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement

from .qseries import (
    INF,
    TruncatedSeries,
    bilateral_theta,
    gaussian_binomial,
    poch,
    restricted_parts,
    triple_product,
)

IDENTITY_NAMES = ("RR1", "RR2", "AG", "AGP", "BR33", "BR35", "EVEN_B", "AGPB",
                  "JTP", "GEN_A", "GEN_B", "GEN_D")

FORMS = {"GEN_B": ("qserie", "qbinom"), "GEN_D": ("qserie", "qbinom")}


@dataclass(frozen=True)
class IdentityId:
    name: str
    r: int | None = None
    i: int | None = None
    z: int | None = None
    step: int | None = None
    form: str | None = None
    uncorrected: bool = False

    def __post_init__(self):
        if self.name not in IDENTITY_NAMES:
            raise ValueError(f"unknown identity {self.name!r}")
        validate(self)

    def __str__(self) -> str:
        if self.name in ("RR1", "RR2"):
            return self.name
        if self.name == "JTP":
            return f"JTP[step={self.step},z={self.z}]"
        tag = f"{self.name}[r={self.r},i={self.i}]"
        if self.form:
            tag += f"/{self.form}"
        if self.uncorrected:
            tag += "/uncorrected"
        return tag


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def validate(ident: IdentityId) -> None:
    name, r, i = ident.name, ident.r, ident.i
    if ident.uncorrected:
        _need(name == "BR33", "only BR33 has an uncorrected variant")
    if ident.form is not None:
        _need(ident.form in FORMS.get(name, ()),
              f"{name} has no form {ident.form!r}")
    if name in ("RR1", "RR2"):
        return
    if name == "JTP":
        _need(ident.step is not None and ident.z is not None, "JTP needs step and z")
        _need(ident.step >= 2, "JTP needs step >= 2")
        _need(1 <= ident.z <= ident.step - 1, "JTP needs 1 <= z <= step-1")
        return
    _need(r is not None and i is not None, f"{name} needs r and i")
    if name == "AG":
        _need(r >= 1 and 1 <= i <= r, "AG needs r >= 1 and 1 <= i <= r")
    elif name in ("AGP", "BR33"):
        _need(r >= 1 and 0 <= i <= r - 1, f"{name} needs r >= 1 and 0 <= i <= r-1")
    elif name in ("BR35", "EVEN_B"):
        _need(r >= 2 and 0 <= i <= r - 1, f"{name} needs r >= 2 and 0 <= i <= r-1")
    elif name == "AGPB":
        _need(r >= 2 and 1 <= i <= r - 1, "AGPB needs r >= 2 and 1 <= i <= r-1")
    else:  # GEN_*
        _need(r >= 2 and 1 <= i <= r, f"{name} needs r >= 2 and 1 <= i <= r")


# ---------------------------------------------------------------- list kernels

def _mul(a, b, n):
    """Product of coefficient lists truncated at q^n."""
    out = [0] * (n + 1)
    la = min(len(a), n + 1)
    lb = min(len(b), n + 1)
    for i in range(la):
        ai = a[i]
        if ai:
            top = min(lb, n + 1 - i)
            for j in range(top):
                bj = b[j]
                if bj:
                    out[i + j] += ai * bj
    return out


def _one_minus(c, x, n):
    """(1 - q^x) * c truncated at q^n."""
    out = list(c[:n + 1]) + [0] * (n + 1 - len(c))
    for k in range(n, x - 1, -1):
        out[k] -= out[k - x]
    return out


@lru_cache(maxsize=None)
def _inv_poch(start, step, count, n):
    if count < 0:
        return (0,)
    return poch(start, step, count, n).inverse().coeffs


def _inv_qfac(k, n):
    return _inv_poch(1, 1, k, n) if k >= 0 else (0,)


def _inv_q2fac(k, n):
    return _inv_poch(2, 2, k, n) if k >= 0 else (0,)


@lru_cache(maxsize=None)
def _qfac(k, n):
    return poch(1, 1, k, n).coeffs


def _index_bound(N):
    s = 0
    while (s + 1) * s <= N:
        s += 1
    return s


def _decreasing_tuples(length, top):
    for t in combinations_with_replacement(range(top + 1), length):
        yield t[::-1]


def _multisum(r, N, exponent, factors, numerator=None, last="q"):
    """Sum over s_1 >= ... >= s_{r-1} >= 0 of q^exponent(s) * numerator * factors.

    ``factors(s)`` returns extra coefficient lists; the standard denominators
    1/(q)_{s_j - s_{j+1}} and 1/(q)_{s_{r-1}} (or 1/(q^2;q^2)) are added
    unless ``factors`` is given as a replacement. ``numerator(s)`` returns a
    list of exponents x meaning prod (1 - q^x), or ``None`` for a zero term.
    """
    acc = [0] * (N + 1)
    bound = _index_bound(N)
    for s in _decreasing_tuples(r - 1, bound):
        e = exponent(s)
        if e > N:
            continue
        m = N - e
        if factors is None:
            fs = [_inv_qfac(s[j] - s[j + 1], m) for j in range(len(s) - 1)]
            if s:
                fs.append(_inv_qfac(s[-1], m) if last == "q" else _inv_q2fac(s[-1], m))
        else:
            fs = factors(s, m)
            if fs is None:
                continue
        c = [1] + [0] * m
        for f in fs:
            c = _mul(c, f, m)
        if numerator is not None:
            for x in numerator(s):
                c = _one_minus(c, x, m)
        for k in range(m + 1):
            if c[k]:
                acc[e + k] += c[k]
    return TruncatedSeries(acc)


# ------------------------------------------------------------------ sum sides

def _sq(s):
    return sum(v * v for v in s)


def ag_sum(r, i, N):
    return _multisum(r, N, lambda s: _sq(s) + sum(s[i - 1:]), None)


def bressoud_sum(r, i, N, last="q"):
    """S_i: exponent sum s^2 - s_1 - ... - s_i."""
    return _multisum(r, N, lambda s: _sq(s) - sum(s[:i]), None, last=last)


def agp_sum(r, i, N):
    num = None if i == 0 else (lambda s: [s[i - 1]])
    return _multisum(r, N, lambda s: _sq(s) - sum(s[:i]), None, num)


def even_sum(r, i, N):
    return _multisum(r, N, lambda s: _sq(s) + sum(s[r - 1 - i:]), None, last="q2")


def agpb_sum(r, i, N):
    if i == 1:
        return bressoud_sum(r, 1, N, last="q2")
    return _multisum(r, N, lambda s: _sq(s) - sum(s[:i]),
                     None, lambda s: [s[i - 1] + s[i - 2]], last="q2")


def gen_a_sum(r, i, N):
    def factors(n, m):
        fs = [_inv_qfac(n[0], m)] if n else []
        fs += [gaussian_binomial(n[j], n[j + 1]) for j in range(len(n) - 1)]
        return fs
    return _multisum(r, N, lambda s: _sq(s) + sum(s[i - 1:]), factors)


def gen_d_qserie(r, i, N):
    k = r - i
    num = None if k == 0 else (lambda d: [d[k - 1]])
    return _multisum(r, N, lambda d: _sq(d) - sum(d[:k]), None, num)


def gen_d_qbinom(r, i, N):
    k = r - i  # number of horizontal rectangles

    def factors(d, m):
        if k == 0:
            # only squares: the first side partition has at most d_1 rows
            fs = [_inv_qfac(d[0], m)]
        else:
            fs = [_inv_qfac(d[0] - 1, m)]
        for j in range(r - 2):
            if j < k - 1:
                fs.append(gaussian_binomial(d[j] - 1, d[j + 1] - 1))
            else:
                fs.append(gaussian_binomial(d[j], d[j + 1]))
        return fs
    return _multisum(r, N, lambda d: _sq(d) - sum(d[:k]), factors)


def _m_sum(mk, upper, n):
    """sum_{m=1}^{upper} q^(m*mk)/(q)_{m-1} truncated at q^n."""
    acc = [0] * (n + 1)
    for m in range(1, upper + 1):
        e = m * mk
        if e > n:
            break
        f = _inv_qfac(m - 1, n - e)
        for t, v in enumerate(f):
            acc[e + t] += v
    return acc


def _gen_b(r, i, N, form):
    acc = [0] * (N + 1)
    acc[0] = 1
    for k in range(1, r):
        first = k <= i - 1
        # m_k ranges up to N (the m-sum starts at q^{m_k}); the smaller m_l
        # contribute at least m_l^2 - m_l each
        small = _index_bound(N)
        for mk in range(1, N + 1):
            upper = mk if first else mk - 1
            if upper < 1:
                continue
            for low in _decreasing_tuples(k - 1, min(small, mk)):
                if low and low[-1] < 1:
                    continue
                ms = tuple(reversed(low)) + (mk,)  # m_1 <= ... <= m_k
                if any(ms[j] > ms[j + 1] for j in range(k - 1)):
                    continue
                e = sum(v * v for v in ms[:k - 1])
                if not first:
                    e -= sum(ms[i - 1:k - 1])
                e_min = e + mk  # m = 1 term
                if e_min > N:
                    continue
                n = N - e
                c = _m_sum(mk, upper, n)
                c = _gen_b_weight(c, ms, k, i, first, form, n)
                if c is None:
                    continue
                for t in range(n + 1):
                    if c[t]:
                        acc[e + t] += c[t]
    return TruncatedSeries(acc)


def _gen_b_weight(c, ms, k, i, first, form, n):
    if form == "qbinom":
        for ell in range(1, k):
            a, b = ms[ell], ms[ell - 1]  # m_{l+1}, m_l
            if first or ell <= i - 1:
                g = gaussian_binomial(a - 1, b - 1)
            else:
                g = gaussian_binomial(a - 2, b - 2)
            c = _mul(c, g, n)
        return c
    # simplified form
    mk, m1 = ms[-1], ms[0]
    if first:
        c = _mul(c, _qfac(mk - 1, n), n)
    else:
        c = _mul(c, _qfac(mk - 2, n), n)
        c = _one_minus(c, ms[i - 1] - 1, n) if ms[i - 1] - 1 >= 1 else [0] * (n + 1)
    c = _mul(c, _inv_qfac(m1 - 1, n), n)
    for ell in range(1, k):
        c = _mul(c, _inv_qfac(ms[ell] - ms[ell - 1], n), n)
    return c


def gen_b_sum(r, i, N, form="qserie"):
    return _gen_b(r, i, N, form)


# -------------------------------------------------------------- product sides

def _tp_quotient(residues, modulus, N, scale=1):
    qinf = poch(1, 1, INF, N)
    total = TruncatedSeries.zero(N)
    for a in residues:
        total = total + triple_product(a, modulus, N)
    return (total * scale) / qinf


def _excluded_product(a, modulus, N):
    """(q^M, q^a, q^(M-a); q^M)_inf / (q)_inf as a restricted-part product."""
    bad = {0, a % modulus, (-a) % modulus}
    out = restricted_parts(lambda k: k % modulus not in bad, N)
    if 2 * a == modulus:
        # q^a appears twice in the numerator
        out = out * poch(a, modulus, INF, N)
    return out


def product_side(ident: IdentityId, N: int, direct: bool = False) -> TruncatedSeries:
    """Product side; ``direct`` uses Pi 1/(1 - q^k) over allowed residues where possible."""
    name, r, i = ident.name, ident.r, ident.i
    if name in ("RR1", "RR2"):
        a = 2 if name == "RR1" else 1
        if direct:
            return _excluded_product(a, 5, N)
        return _tp_quotient([a], 5, N)
    if name == "JTP":
        return triple_product(ident.z, ident.step, N)
    if name in ("AG", "GEN_A", "GEN_B", "GEN_D"):
        res, mod = [i], 2 * r + 1
    elif name == "AGP":
        res, mod = [r - i], 2 * r + 1
    elif name == "BR33":
        shift = 1 if ident.uncorrected else 0
        res, mod = [r - i + k + shift for k in range(i + 1)], 2 * r + 1
    elif name == "BR35":
        res, mod = [r - i + 2 * k for k in range(i + 1)], 2 * r
    elif name == "EVEN_B":
        res, mod = [r - i], 2 * r
    elif name == "AGPB":
        res, mod = [r - i, r - i], 2 * r
    else:
        raise ValueError(name)
    if direct:
        if len(res) == 1 or (name == "AGPB"):
            out = _excluded_product(res[0], mod, N)
            return out * len(res)
        raise ValueError(f"{name} has no single restricted-part product")
    return _tp_quotient(res, mod, N)


def has_direct_product(ident: IdentityId) -> bool:
    if ident.name == "JTP":
        return False
    if ident.name in ("BR33", "BR35"):
        return ident.i == 0
    return True


def sum_side(ident: IdentityId, N: int) -> TruncatedSeries:
    name, r, i = ident.name, ident.r, ident.i
    if name == "RR1":
        return ag_sum(2, 2, N)
    if name == "RR2":
        return ag_sum(2, 1, N)
    if name == "JTP":
        return bilateral_theta(ident.z, ident.step, N)
    if name == "AG":
        return ag_sum(r, i, N)
    if name == "AGP":
        return agp_sum(r, i, N)
    if name == "BR33":
        return bressoud_sum(r, i, N)
    if name == "BR35":
        return bressoud_sum(r, i, N, last="q2")
    if name == "EVEN_B":
        return even_sum(r, i, N)
    if name == "AGPB":
        return agpb_sum(r, i, N)
    if name == "GEN_A":
        return gen_a_sum(r, i, N)
    if name == "GEN_B":
        return gen_b_sum(r, i, N, ident.form or "qserie")
    if name == "GEN_D":
        if (ident.form or "qserie") == "qbinom":
            return gen_d_qbinom(r, i, N)
        return gen_d_qserie(r, i, N)
    raise ValueError(name)


@dataclass(frozen=True)
class Verification:
    ident: IdentityId
    order: int
    ok: bool
    witness: tuple[int, int, int] | None
    lhs: TruncatedSeries
    rhs: TruncatedSeries


def verify(ident: IdentityId, N: int) -> Verification:
    lhs = sum_side(ident, N)
    rhs = product_side(ident, N)
    w = lhs.first_mismatch(rhs)
    return Verification(ident, N, w is None, w, lhs, rhs)


def admissible(name: str, r: int):
    """All admissible i for ``name`` at ``r`` (empty when r is out of range)."""
    if name == "AG":
        return list(range(1, r + 1)) if r >= 1 else []
    if name in ("AGP", "BR33"):
        return list(range(0, r)) if r >= 1 else []
    if name in ("BR35", "EVEN_B"):
        return list(range(0, r)) if r >= 2 else []
    if name == "AGPB":
        return list(range(1, r)) if r >= 2 else []
    if name in ("GEN_A", "GEN_B", "GEN_D"):
        return list(range(1, r + 1)) if r >= 2 else []
    return []
