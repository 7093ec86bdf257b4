import pytest

from raag_genus.graph import orient, validate_graph
from raag_genus.homology import new_class

SQUARE_EDGES = [["v1", "w1"], ["v1", "w2"], ["v2", "w1"], ["v2", "w2"]]
PENTAGON_EDGES = [["v1", "v2"], ["v2", "v3"], ["v3", "v4"], ["v4", "v5"], ["v5", "v1"]]

M_ALPHA = [[0, 0, 1, 0], [0, 0, 0, -1], [-1, 0, 0, 0], [0, 1, 0, 0]]
M_BETA = [[0, 0, 2, 4], [0, 0, 3, 6], [-2, -3, 0, 0], [-4, -6, 0, 0]]


@pytest.fixture
def square():
    return orient(validate_graph(["v1", "v2", "w1", "w2"], SQUARE_EDGES), SQUARE_EDGES)


@pytest.fixture
def beta(square):
    return new_class(square, [("v1", "w1", 2), ("v1", "w2", 4), ("v2", "w1", 3), ("v2", "w2", 6)])


@pytest.fixture
def alpha(square):
    return new_class(square, [("v1", "w1", 1), ("v2", "w2", -1)])


@pytest.fixture
def pentagon():
    return orient(validate_graph(["v1", "v2", "v3", "v4", "v5"], PENTAGON_EDGES), PENTAGON_EDGES)


@pytest.fixture
def pentagon_ones(pentagon):
    return new_class(pentagon, [(v, w, 1) for v, w in PENTAGON_EDGES])


def pytest_terminal_summary(terminalreporter):
    from .test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
