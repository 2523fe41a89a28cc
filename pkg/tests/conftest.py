import pytest

from seqsavage import ActionLibrary, PropSet
from seqsavage.generators import full_library, props_for


@pytest.fixture
def pq():
    return PropSet.of("p", "q")


@pytest.fixture
def lib1():
    """One proposition, every effect: N = 2 atoms, three effect classes."""
    return full_library(props_for(2))


@pytest.fixture
def lib_pq(pq):
    return ActionLibrary.from_strings(pq, ["p", "q", "~q", "p | q", "p | ~q", "p & (q | ~q)"])


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
