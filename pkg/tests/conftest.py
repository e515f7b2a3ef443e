from __future__ import annotations

import pytest
from hypothesis import settings, strategies as st

from durfee.classes import CLASS_NAMES, predicate
from durfee.partitions import Partition, partitions_of

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")

# lines recorded by test_acceptance.py, echoed at the end of the run
ACCEPTANCE: dict[int, str] = {}


def partitions(max_part: int = 8, max_len: int = 8):
    return st.lists(st.integers(1, max_part), max_size=max_len).map(
        lambda xs: Partition(sorted(xs, reverse=True)))


def class_sets(r_values, n_max, names=CLASS_NAMES):
    """{(name, r, i, n): frozenset of members} over every admissible i."""
    out = {}
    for r in r_values:
        for i in range(1, r + 1):
            for name in names:
                pred = predicate(name)
                for n in range(n_max + 1):
                    out[(name, r, i, n)] = frozenset(
                        lam for lam in partitions_of(n) if pred(lam, r, i))
    return out


@pytest.fixture(scope="session")
def class_table():
    """Members of all six classes for r = 2..5 and n <= 30 (shared by acceptance 1 and 4)."""
    return class_sets(range(2, 6), 30)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[k])
