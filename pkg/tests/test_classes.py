import pytest

from durfee.classes import (
    ClassId,
    Transition,
    classify_transition,
    count,
    in_A,
    in_B,
    in_C,
    in_D,
    in_E,
    in_T,
    member,
    members,
    new_parts,
)
from durfee.partitions import EMPTY, Partition, partitions_of

LAM = Partition((6, 5, 5, 4, 3))


def gordon_oracle(lam, r, i):
    """Direct reading of the frequency condition f_j + f_{j+1} <= r-1, f_1 <= i-1."""
    f = [lam.multiplicity(v) for v in range(0, (lam[0] if lam else 0) + 2)]
    if f[1] > i - 1:
        return False
    return all(f[j] + f[j + 1] <= r - 1 for j in range(1, len(f) - 1))


def congruence_oracle(lam, r, i):
    m = 2 * r + 1
    return all(v % m not in (0, i, m - i) for v in lam)


def test_spec_examples():
    assert in_T(Partition((3, 1)), 2, 2)
    assert sum(in_T(lam, 2, 2) for lam in partitions_of(4)) == 2
    assert in_D(Partition((3, 3, 1)), 3, 2)
    assert [lam for lam in partitions_of(4) if in_E(lam, 2, 1)] == [(2, 2)]


@pytest.mark.parametrize("r", [2, 3, 4])
def test_T_and_E_against_oracles(r):
    for i in range(1, r + 1):
        for n in range(13):
            for lam in partitions_of(n):
                assert in_T(lam, r, i) == gordon_oracle(lam, r, i)
                assert in_E(lam, r, i) == congruence_oracle(lam, r, i)


@pytest.mark.parametrize("r", [2, 3, 4, 5])
def test_six_counts_agree_small(r):
    for i in range(1, r + 1):
        for n in range(15):
            vals = {name: count(ClassId(name, r, i), n) for name in "TEABCD"}
            assert len(set(vals.values())) == 1, (r, i, n, vals)


@pytest.mark.parametrize("r", [2, 3, 4])
def test_B_C_D_setwise_small(r):
    for i in range(1, r + 1):
        for n in range(15):
            d = members(ClassId("D", r, i), n)
            assert members(ClassId("B", r, i), n) == d
            assert members(ClassId("C", r, i), n) == d


def test_new_parts_examples():
    assert new_parts(LAM, 3, 1).values == (3, 5)
    assert new_parts(LAM, 3, 1).count == 2
    assert new_parts(EMPTY, 3, 2).count == 0
    np_ = new_parts(Partition((1,)), 3, 2)
    assert np_.values == (1, 0) and np_.count == 1


def test_class_id_validation():
    with pytest.raises(ValueError):
        ClassId("Q", 3, 1)
    with pytest.raises(ValueError):
        ClassId("T", 3, 4)
    with pytest.raises(ValueError):
        ClassId("T", 1, 1)
    # A, B, D accept r = 1, where only the empty partition survives
    assert member(ClassId("D", 1, 1), EMPTY)
    assert not member(ClassId("A", 1, 1), Partition((1,)))
    assert not in_B(Partition((2,)), 1, 1)


def test_example_is_transition():
    assert classify_transition(LAM, 3, 1).is_transition
    assert in_D(LAM, 3, 1) and not in_D(LAM, 2, 1)


@pytest.mark.parametrize("r", [3, 4, 5])
def test_transition_is_set_difference(r):
    for i in range(1, r + 1):
        for n in range(17):
            for lam in partitions_of(n):
                t = classify_transition(lam, r, i)
                expect = in_D(lam, r, i) and not in_D(lam, r - 1, min(i, r - 1))
                assert t.is_transition == expect, (lam, r, i, t)
                if t is Transition.OUTSIDE:
                    assert not in_D(lam, r, i)


def test_A_and_C_examples():
    assert in_A(Partition((3, 3, 1)), 3, 3)
    assert in_C(LAM, 3, 1)
