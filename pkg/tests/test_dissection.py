import pytest
from hypothesis import given, strategies as st

from durfee.dissection import (
    BR,
    BS,
    H,
    S,
    V,
    bottom_dissect,
    bottom_heights,
    bottom_plan,
    dissect,
    durfee_heights,
    durfee_plan,
    interleaving,
    largest_fitting,
    parse_plan,
    reconstruct,
    squares,
)
from durfee.partitions import EMPTY, Partition, partitions_of

from conftest import partitions

LAM = Partition((6, 5, 5, 4, 3))


def test_largest_fitting_examples():
    assert largest_fitting(LAM, S) == 4
    assert largest_fitting(LAM, H) == 4
    for kind in (S, V, H):
        assert largest_fitting(EMPTY, kind) == 0
    with pytest.raises(ValueError):
        largest_fitting(LAM, BS)


def test_two_rectangles_of_example():
    d = dissect(LAM, [H, H])
    assert [(b.width, b.height) for b in d.blocks] == [(4, 3), (3, 2)]
    assert d.residual_rows == 0


def test_rect_then_square():
    d = dissect(Partition((3, 3, 1)), [H, S])
    assert d.majors == (3, 1)
    assert d.residual_rows == 0


@pytest.mark.parametrize("r,i", [(3, 2), (4, 2), (4, 3), (5, 4)])
def test_ones_give_flat_rectangles(r, i):
    d = dissect(Partition([1] * (i - 1)), durfee_plan(r, i))
    rects, sqs = d.blocks[:r - i], d.blocks[r - i:]
    assert all(b.major == 1 and b.height == 0 and not b.empty for b in rects)
    assert all(b.major == 1 and b.rows == 1 for b in sqs)


def test_empty_partition_all_blocks_empty():
    d = dissect(EMPTY, [H, S, V])
    assert all(b.empty for b in d.blocks) and d.residual_rows == 0
    d = bottom_dissect(EMPTY, [BS, BR])
    assert all(b.empty for b in d.blocks)


def test_bottom_examples():
    d = bottom_dissect(Partition((3, 3, 1)), [BS, BR])
    assert [(b.width, b.height) for b in d.blocks] == [(1, 1), (3, 2)]
    assert d.residual_rows == 0
    d = bottom_dissect(Partition((2, 2)), [BR])
    assert [(b.width, b.height) for b in d.blocks] == [(2, 1)]
    assert d.residual_rows == 1


def test_parse_plan():
    assert parse_plan("HHS") == [H, H, S]
    assert parse_plan("bB") == [BS, BR]
    with pytest.raises(ValueError):
        parse_plan("X")


def test_plans_by_scheme():
    assert durfee_plan(5, 3) == [H, H, S, S]
    assert bottom_plan(5, 3) == [BS, BS, BR, BR]


@given(partitions(), st.lists(st.sampled_from([S, V, H]), min_size=1, max_size=4))
def test_top_blocks_reconstruct(lam, plan):
    d = dissect(lam, plan)
    assert reconstruct(d) == lam
    covered = sum(b.rows for b in d.blocks) + d.residual_rows
    assert covered == len(lam)


@given(partitions(), st.lists(st.sampled_from([BS, BR]), min_size=1, max_size=4))
def test_bottom_blocks_reconstruct(lam, plan):
    d = bottom_dissect(lam, plan)
    assert reconstruct(d) == lam


@given(partitions())
def test_squares_cover(lam):
    d = squares(lam)
    assert sum(d.majors) == len(lam) or d.residual_rows == 0
    assert all(not b.empty for b in d.blocks)
    assert list(d.majors) == sorted(d.majors, reverse=True)


@given(partitions())
def test_heights_are_cumulative(lam):
    d = dissect(lam, [S, S, S])
    hd = durfee_heights(d)
    assert hd == sorted(hd)
    b = bottom_dissect(lam, [BS, BS])
    assert bottom_heights(b)[-1] == sum(x.height for x in b.blocks)


@pytest.mark.parametrize("kind", [S, H])
@pytest.mark.parametrize("r", [2, 3, 4, 5])
def test_interleaving_exhaustive(kind, r):
    seen = 0
    for n in range(21):
        for lam in partitions_of(n):
            x = interleaving(lam, r, kind)
            if x is None:
                continue
            seen += 1
            assert x.chain_holds(), lam
            assert x.equality_holds(), lam
    assert seen > 0


def test_interleaving_applicability():
    # a part equal to 1 makes flat rectangles, so the rectangle case is skipped
    assert interleaving(Partition((3, 1)), 3, H) is None
    # one square only, but r - 1 = 2 were asked for
    assert interleaving(Partition((1,)), 3, S) is None
    x = interleaving(Partition((3, 3, 1)), 3, S)
    assert x is not None and x.durfee == (1, 3) and x.holds()
