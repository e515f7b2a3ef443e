import pytest
from hypothesis import given, strategies as st

from durfee.partitions import (
    EMPTY,
    Partition,
    PartitionError,
    conjugate,
    enumerate_partitions,
    format_partition,
    parse_partition,
    partition_count,
    partitions_of,
)

from conftest import partitions


def test_make_partition():
    assert Partition([4]) == (4,) and Partition([4]).weight == 4
    assert Partition([3, 1]).weight == 4
    with pytest.raises(PartitionError):
        Partition([1, 3])
    with pytest.raises(PartitionError):
        Partition([2, 0])


def test_enumerate_small():
    assert list(enumerate_partitions(0)) == [EMPTY]
    assert list(enumerate_partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert len(partitions_of(10)) == 42


@pytest.mark.parametrize("n", range(0, 26))
def test_enumeration_matches_recurrence(n):
    parts = partitions_of(n)
    assert len(parts) == partition_count(n)
    assert len(set(parts)) == len(parts)
    assert all(sum(p) == n for p in parts)


def test_conjugate_examples():
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate(()) == EMPTY


@given(partitions())
def test_conjugate_involution(lam):
    mu = conjugate(lam)
    assert conjugate(mu) == lam
    assert mu.weight == lam.weight
    assert len(mu) == (lam[0] if lam else 0)


@given(partitions())
def test_format_parse_round_trip(lam):
    assert parse_partition(format_partition(lam)) == lam


@pytest.mark.parametrize("bad", ["1,3", "a,b", "2,-1", "2,,1"])
def test_parse_rejects(bad):
    with pytest.raises(PartitionError):
        parse_partition(bad)


@given(partitions(), st.integers(1, 9))
def test_part_and_multiplicity(lam, j):
    assert lam.part(j) == (lam[j - 1] if j <= len(lam) else 0)
    assert sum(lam.multiplicity(v) for v in set(lam)) == len(lam)
