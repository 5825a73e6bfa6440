import pytest
from hypothesis import strategies as st

from hurwitz.core import Partition
from hurwitz.cutjoin import CutJoin


@pytest.fixture
def engine():
    """A fresh memo table, isolated from the module-level default."""
    return CutJoin()


def P(*parts):
    return Partition(parts)


partition_st = st.lists(st.integers(1, 6), min_size=1, max_size=5).map(Partition)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
