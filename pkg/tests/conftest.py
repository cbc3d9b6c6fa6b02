from pathlib import Path

import pytest

from cfsindex.infsup import Digraph
from cfsindex.nfa import parse_nfa

DATA = Path(__file__).parent / "data"

# Sixteen-node example digraph, node k stored as id k-1; the integer order is the node order.
EX16_EDGES = [
    (2, 6), (6, 2), (2, 11), (2, 5), (11, 9), (5, 11), (5, 3), (9, 5), (3, 4),
    (5, 7), (7, 5), (9, 13), (7, 4), (7, 13), (4, 15), (4, 10), (13, 15),
    (15, 8), (10, 8), (1, 9), (12, 16), (16, 1), (16, 9), (12, 14), (14, 12),
]
# The leftmost predecessor of every node, as node -> p(node), 1-based.
EX16_LEFTMOST = {
    8: 10, 9: 11, 11: 5, 4: 3, 3: 5, 10: 4, 15: 4, 13: 7,
    1: 16, 16: 12, 5: 7, 7: 5, 12: 14, 14: 12, 2: 6, 6: 2,
}

ACCEPTANCE_LINES: list[str] = []


def load(name: str):
    return parse_nfa((DATA / name).read_text())


@pytest.fixture(scope="session")
def ex13():
    return load("example13.nfa")


@pytest.fixture(scope="session")
def ex16():
    return Digraph.from_edges(16, [(a - 1, b - 1) for a, b in EX16_EDGES])


@pytest.fixture(scope="session")
def single():
    return load("single.nfa")


@pytest.fixture(scope="session")
def twin():
    return load("twin.nfa")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
