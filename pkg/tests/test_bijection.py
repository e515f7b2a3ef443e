import pytest
from hypothesis import given

from durfee.bijection import (
    Branch,
    Direction,
    T_inv,
    T_inv_branch,
    T_map,
    in_A_double_prime,
    in_A_prime,
    marks_A,
    rotate_simple,
)
from durfee.classes import in_A, in_D
from durfee.partitions import EMPTY, Partition, partitions_of

from conftest import partitions


def test_marks():
    mk = marks_A(Partition((3, 3, 1)))
    assert mk.A_set == {1} and mk.m == mk.M == 1
    assert marks_A(Partition((3, 2, 1))).A_set == frozenset()
    assert marks_A(EMPTY).A_set == frozenset()


def test_T_example():
    mu = T_map(Partition((3, 3, 1)), 3)
    assert mu == (2, 2, 2, 1)
    assert in_A(mu, 3, 2)
    assert T_inv_branch(mu, 3) is Branch.FIRST
    assert T_inv(mu, 3) == (3, 3, 1)
    assert T_map(EMPTY, 3) == EMPTY and T_inv(EMPTY, 3) == EMPTY


def test_T_rejects_outside():
    with pytest.raises(ValueError):
        T_map(Partition((3, 2, 1)), 3)
    with pytest.raises(ValueError):
        T_inv(Partition((9,)), 2)


@pytest.mark.parametrize("r", [2, 3, 4, 5])
def test_T_bijection(r):
    for n in range(19):
        src = [lam for lam in partitions_of(n) if in_A_double_prime(lam, r)]
        dst = {mu for mu in partitions_of(n) if in_A(mu, r, r - 1)}
        image = set()
        for lam in src:
            mu = T_map(lam, r)
            assert sum(mu) == n and mu in dst
            assert T_inv(mu, r) == lam
            image.add(mu)
        assert image == dst
        assert set(src) == {lam for lam in partitions_of(n) if in_D(lam, r, r - 1)}


@pytest.mark.parametrize("r", [3, 4, 5])
def test_branch_matches_marker(r):
    for n in range(17):
        for lam in partitions_of(n):
            if not in_A_prime(lam, r):
                continue
            b = T_inv_branch(T_map(lam, r), r)
            M = marks_A(lam).M
            if M == 1:
                assert b is Branch.FIRST
            elif M == r - 1:
                assert b is Branch.LAST
            else:
                assert b is Branch.MIDDLE


@pytest.mark.parametrize("r", [2, 3, 4])
def test_rotation_round_trip(r):
    for n in range(17):
        src = [lam for lam in partitions_of(n) if in_A(lam, r, 1)]
        dst = {mu for mu in partitions_of(n) if in_D(mu, r, 1)}
        image = set()
        for lam in src:
            mu = rotate_simple(lam, r, Direction.A_TO_D)
            assert rotate_simple(mu, r, Direction.D_TO_A) == lam
            image.add(mu)
        assert image == dst


@given(partitions())
def test_identity_case(lam):
    for r in (2, 3, 4):
        assert in_A(lam, r, r) == in_D(lam, r, r)
        if in_A(lam, r, r):
            assert rotate_simple(lam, r, Direction.A_TO_D, i=r) == lam


def test_rotation_only_for_simple_cases():
    with pytest.raises(ValueError):
        rotate_simple(EMPTY, 4, Direction.A_TO_D, i=2)
