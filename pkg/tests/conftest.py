import pytest

from rsinv.exact import as_matrix
from rsinv.invariants import group_closure

MINUS_I = as_matrix([[-1, 0], [0, -1]])
ROT = as_matrix([[0, -1], [1, 0]])
SWAP = as_matrix([[0, 1], [1, 0]])
CYCLE3 = as_matrix([[0, 0, 1], [1, 0, 0], [0, 1, 0]])
TRANSP3 = as_matrix([[0, 1, 0], [1, 0, 0], [0, 0, 1]])


def make_groups():
    return {
        "C2": group_closure([MINUS_I]),
        "C4": group_closure([ROT]),
        "S2": group_closure([SWAP]),
        "S3": group_closure([CYCLE3, TRANSP3]),
    }


@pytest.fixture(scope="session")
def groups():
    return make_groups()


@pytest.fixture(scope="session")
def trivial2():
    return group_closure([as_matrix([[1, 0], [0, 1]])])


ACCEPTANCE_RESULTS = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {number:>2}. {title}")
