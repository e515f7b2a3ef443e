from itertools import product

import pytest
from hypothesis import given, strategies as st

from durfee.partitions import partition_count
from durfee.qseries import (
    INF,
    TruncatedSeries,
    bilateral_theta,
    gaussian_binomial,
    inv_qfac,
    poch,
    qbinom,
    qfac,
    restricted_parts,
    triple_product,
)

N = 40

series = st.lists(st.integers(-20, 20), min_size=1, max_size=12).map(
    lambda c: TruncatedSeries(c, 11))


def pentagonal(order):
    c = [0] * (order + 1)
    k = 0
    while True:
        hit = False
        for g in {k * (3 * k - 1) // 2, k * (3 * k + 1) // 2}:
            if g <= order:
                c[g] += -1 if k % 2 else 1
                hit = True
        if not hit:
            return TruncatedSeries(c)
        k += 1


def test_euler_product():
    assert poch(1, 1, INF, 12) == TruncatedSeries.from_terms({0: 1, 1: -1, 2: -1, 5: 1, 7: 1, 12: -1}, 12)
    assert poch(1, 1, INF, N) == pentagonal(N)
    assert poch(1, 1, 0, N) == TruncatedSeries.one(N)


def test_partition_generating_function():
    inv = poch(1, 1, INF, N).inverse()
    assert list(inv) == [partition_count(n) for n in range(N + 1)]


def test_qbinom_values():
    assert list(qbinom(4, 2, 4)) == [1, 1, 2, 1, 1]
    assert list(qbinom(7, 0, 5)) == [1, 0, 0, 0, 0, 0]
    assert qbinom(3, 5, 5) == TruncatedSeries.zero(5)
    assert qbinom(3, -1, 5) == TruncatedSeries.zero(5)


@pytest.mark.parametrize("n,k", [(4, 2), (6, 3), (7, 2), (8, 5)])
def test_gaussian_binomial_counts_box_partitions(n, k):
    # [n choose k] counts partitions inside a k x (n-k) box
    coeffs = [0] * (k * (n - k) + 1)
    for parts in product(range(n - k + 1), repeat=k):
        if list(parts) == sorted(parts, reverse=True):
            coeffs[sum(parts)] += 1
    assert list(gaussian_binomial(n, k)) == coeffs


def test_qfac_inverse():
    for k in range(8):
        assert qfac(k, 20) * inv_qfac(k, 20) == TruncatedSeries.one(20)
    assert inv_qfac(-1, 20) == TruncatedSeries.zero(20)


@pytest.mark.parametrize("step,z", [(5, 1), (5, 2), (7, 3), (9, 4), (11, 5), (2, 1)])
def test_jacobi_triple_product(step, z):
    assert bilateral_theta(z, step, N) == triple_product(z, step, N)


def test_jtp_rogers_ramanujan_example():
    # z = q^2 in base q^5 gives (q^5, q^2, q^3; q^5)_inf
    rhs = poch(5, 5, INF, N) * poch(2, 5, INF, N) * poch(3, 5, INF, N)
    assert bilateral_theta(2, 5, N) == rhs


def test_restricted_parts():
    odd = restricted_parts(lambda v: v % 2 == 1, 29)
    # odd parts equinumerous with distinct parts: (-q;q)_inf = 1/(q;q^2)_inf
    dist = TruncatedSeries.one(29)
    for v in range(1, 30):
        dist = dist * (TruncatedSeries.one(29) + TruncatedSeries.monomial(v, 29))
    assert odd == dist


def test_str_and_json():
    s = TruncatedSeries.from_terms({0: 1, 1: 1, 2: 2}, 8)
    assert str(s) == "1 + q + 2*q^2 + O(q^9)"
    assert TruncatedSeries.from_json(s.to_json()) == s
    assert all(isinstance(x, str) for x in s.to_json())


def test_first_mismatch():
    a = TruncatedSeries([1, 2, 3, 4])
    b = TruncatedSeries([1, 2, 5, 4])
    assert a.first_mismatch(b) == (2, 3, 5)
    assert a.first_mismatch(a) is None


def test_inverse_needs_unit_constant():
    with pytest.raises((ValueError, ZeroDivisionError)):
        TruncatedSeries([2, 1]).inverse()
    with pytest.raises((ValueError, ZeroDivisionError)):
        TruncatedSeries([0, 1]).inverse()


def test_poch_rejects_zero_start():
    with pytest.raises(ValueError):
        poch(0, 1, 3, 10)


@given(series, series, series)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == TruncatedSeries.zero(11)


@given(st.sampled_from([1, -1]), series)
def test_inverse_property(unit, b):
    a = TruncatedSeries([unit] + list(b)[1:], 11)
    assert a * a.inverse() == TruncatedSeries.one(11)


@given(series, st.integers(0, 15))
def test_shift_is_monomial_product(a, k):
    assert a.shift(k) == a * TruncatedSeries.monomial(k, 11)
