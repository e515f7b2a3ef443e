"""Bailey pairs related to a = q^e and the two rho -> infinity transformations.

A pair stores alpha_0..alpha_M and beta_0..beta_M as series of order N and
satisfies

    beta_n = sum_{j<=n} alpha_j / ((q)_{n-j} (q^{e+1})_{n+j}).

The chain step keeps a. The lattice step sends a to a/q and needs e >= 1 so
that every series keeps nonnegative powers of q. Its limiting form is

    alpha'_n = (1-a) a^n q^{n^2-n} (alpha_n/(1-a q^{2n})
                                    - a q^{2n-2} alpha_{n-1}/(1-a q^{2n-2}))
    beta'_n  = sum_j a^j q^{j^2-j} beta_j / (q)_{n-j}

obtained from (rho)_n (x/rho)^n -> (-1)^n q^{n(n-1)/2} x^n for both rhos.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .identities import _multisum
from .qseries import INF, TruncatedSeries, inv_qfac, poch, series_sum


@dataclass(frozen=True)
class BaileyPair:
    e: int
    alpha: tuple[TruncatedSeries, ...]
    beta: tuple[TruncatedSeries, ...]
    order: int
    history: tuple[str, ...] = field(default=())

    @property
    def M(self) -> int:
        return len(self.alpha) - 1


def _one_minus_q(k: int, N: int) -> TruncatedSeries:
    """1 - q^k for k >= 1."""
    return TruncatedSeries.one(N) - TruncatedSeries.monomial(k, N)


def _inv_one_minus_q(k: int, N: int) -> TruncatedSeries:
    if k < 1:
        raise ZeroDivisionError("1 - q^0 vanishes")
    return _one_minus_q(k, N).inverse()


def unit_alpha(e: int, n: int, N: int) -> TruncatedSeries:
    """alpha_n of the unit pair with the (1 - a) pole cancelled against (a)_n."""
    if n == 0:
        return TruncatedSeries.one(N)
    sign = -1 if n % 2 else 1
    t = TruncatedSeries.monomial(n * (n - 1) // 2, N, sign)
    t = t * _one_minus_q(e + 2 * n, N)
    # (q^e;q)_n / (1 - q^e) = (q^{e+1};q)_{n-1}
    t = t * poch(e + 1, 1, n - 1, N)
    return t * inv_qfac(n, N)


def unit_pair(e: int, M: int, N: int) -> BaileyPair:
    if e < 0:
        raise ValueError("e must be nonnegative")
    alpha = tuple(unit_alpha(e, n, N) for n in range(M + 1))
    beta = (TruncatedSeries.one(N),) + tuple(TruncatedSeries.zero(N) for _ in range(M))
    return BaileyPair(e, alpha, beta, N, ("unit",))


def relation_rhs(p: BaileyPair, n: int) -> TruncatedSeries:
    N = p.order
    terms = []
    for j in range(n + 1):
        inv = poch(p.e + 1, 1, n + j, N).inverse()
        terms.append(p.alpha[j] * inv_qfac(n - j, N) * inv)
    return series_sum(terms, N)


def relation_defect(p: BaileyPair):
    """First (n, power, beta_coeff, rhs_coeff) where the relation fails, or None."""
    for n in range(p.M + 1):
        w = p.beta[n].first_mismatch(relation_rhs(p, n))
        if w is not None:
            return (n,) + w
    return None


def verify_pair(p: BaileyPair) -> bool:
    return relation_defect(p) is None


def chain_step(p: BaileyPair) -> BaileyPair:
    N, e = p.order, p.e
    alpha = tuple(a.shift(e * n + n * n) for n, a in enumerate(p.alpha))
    beta = []
    for n in range(p.M + 1):
        beta.append(series_sum(
            (p.beta[j].shift(e * j + j * j) * inv_qfac(n - j, N) for j in range(n + 1)), N))
    return BaileyPair(e, alpha, tuple(beta), N, p.history + ("chain",))


def lattice_step(p: BaileyPair) -> BaileyPair:
    N, e = p.order, p.e
    if e < 1:
        raise ValueError("the lattice step needs a = q^e with e >= 1")
    one_minus_a = _one_minus_q(e, N)
    alpha = [p.alpha[0]]
    for n in range(1, p.M + 1):
        lead = p.alpha[n] * _inv_one_minus_q(e + 2 * n, N)
        prev = p.alpha[n - 1].shift(e + 2 * n - 2) * _inv_one_minus_q(e + 2 * n - 2, N)
        alpha.append((one_minus_a * (lead - prev)).shift(e * n + n * n - n))
    beta = []
    for n in range(p.M + 1):
        beta.append(series_sum(
            (p.beta[j].shift(e * j + j * j - j) * inv_qfac(n - j, N) for j in range(n + 1)), N))
    return BaileyPair(e - 1, tuple(alpha), tuple(beta), N, p.history + ("lattice",))


def limit_sum(p: BaileyPair) -> TruncatedSeries:
    """(q)_inf * beta_infinity = sum_j alpha_j / (q^{e+1};q)_inf.

    Only correct when every alpha_j with j > M vanishes below q^(N+1).
    """
    N = p.order
    return series_sum(p.alpha, N) * poch(p.e + 1, 1, INF, N).inverse()


def tail_index(N: int) -> int:
    """Smallest M such that every alpha_j, j > M, of any pipeline starts above q^N.

    The unit pair has valuation j(j-1)/2 at index j; both steps only raise
    valuations (the lattice step mixes alpha_{j-1}, whose shift by
    j^2 + j - 2 more than compensates).
    """
    M = 0
    while (M + 1) * M // 2 <= N:
        M += 1
    return M


@dataclass(frozen=True)
class PipelineResult:
    r: int
    i: int
    e: int
    order: int
    M: int
    pairs: tuple[BaileyPair, ...]
    limit: TruncatedSeries

    @property
    def final(self) -> BaileyPair:
        return self.pairs[-1]


def pipeline_steps(r: int, i: int) -> list[str]:
    """r - i chain steps, one lattice step, i - 1 chain steps; i = 0 means r chain steps."""
    if not 0 <= i <= r:
        raise ValueError("need 0 <= i <= r")
    if i == 0:
        return ["chain"] * r
    return ["chain"] * (r - i) + ["lattice"] + ["chain"] * (i - 1)


def pipeline(r: int, i: int, e: int, N: int, M: int | None = None) -> PipelineResult:
    if r < 1:
        raise ValueError("r must be positive")
    steps = pipeline_steps(r, i)
    if "lattice" in steps and e < 1:
        raise ValueError("the lattice step needs e >= 1")
    if M is None:
        M = tail_index(N)
    p = unit_pair(e, M, N)
    pairs = [p]
    for s in steps:
        p = chain_step(p) if s == "chain" else lattice_step(p)
        pairs.append(p)
    return PipelineResult(r, i, e, N, M, tuple(pairs), limit_sum(p))


def lattice_lhs(r: int, i: int, e: int, N: int) -> TruncatedSeries:
    """Left side of the lattice corollary for the unit pair at a = q^e.

    beta is a delta at 0, so s_r = 0 and r - 1 indices remain.
    """
    if not 0 <= i <= r:
        raise ValueError("need 0 <= i <= r")
    return _multisum(r, N, lambda s: sum(v * v for v in s) - sum(s[:i]) + e * sum(s), None)


def unit_endgame(r: int, N: int) -> TruncatedSeries:
    """1 + sum_{j>=1} (-1)^j q^{r j^2 + j(j-1)/2} (1 + q^j): the a = 1 chain limit times (q)_inf."""
    c = [0] * (N + 1)
    c[0] = 1
    j = 1
    while r * j * j + j * (j - 1) // 2 <= N:
        base = r * j * j + j * (j - 1) // 2
        sign = -1 if j % 2 else 1
        c[base] += sign
        if base + j <= N:
            c[base + j] += sign
        j += 1
    return TruncatedSeries(c)


def derive_Si(r: int, i: int, N: int) -> TruncatedSeries:
    """S_i from the regrouped lattice sum with the a = 1 unit pair.

    (q)_inf S_i = (i+1) alpha_0
                  + sum_{j>=1} q^{r j^2 - i j} alpha_j (1 - q^{(2i+2)j}) / (1 - q^{2j})
    where (1 - a^{i+1})/(1 - a) -> i + 1 at a = 1.
    """
    if r < 1 or not 0 <= i <= r - 1:
        raise ValueError("need r >= 1 and 0 <= i <= r-1")
    total = TruncatedSeries.one(N) * (i + 1)
    j = 1
    # alpha_j starts at q^{j(j-1)/2}
    while r * j * j - i * j + j * (j - 1) // 2 <= N:
        a = unit_alpha(0, j, N)
        t = (a * _one_minus_q((2 * i + 2) * j, N) * _inv_one_minus_q(2 * j, N))
        total = total + t.shift(r * j * j - i * j)
        j += 1
    return total * poch(1, 1, INF, N).inverse()


def derive_Si_expanded(r: int, i: int, N: int) -> TruncatedSeries:
    """Same series after expanding (1 - q^{(2i+2)j})/(1 - q^j) = (1 + q^{(i+1)j}) sum_k q^{kj}."""
    if r < 1 or not 0 <= i <= r - 1:
        raise ValueError("need r >= 1 and 0 <= i <= r-1")
    c = [0] * (N + 1)
    c[0] = i + 1
    j = 1
    while r * j * j - i * j + j * (j - 1) // 2 <= N:
        base = r * j * j - i * j + j * (j - 1) // 2
        sign = -1 if j % 2 else 1
        for k in range(i + 1):
            for extra in (k * j, k * j + (i + 1) * j):
                if base + extra <= N:
                    c[base + extra] += sign
        j += 1
    return TruncatedSeries(c) * poch(1, 1, INF, N).inverse()
