import pytest

from orderpoly import AcyclicDigraph, LabeledGraph

# the three labelings of a 3-vertex digraph with one arc and an isolated vertex
D1_ARCS = [(1, 3)]
D2_ARCS = [(3, 1)]
D3_ARCS = [(2, 1)]


@pytest.fixture
def d1():
    return AcyclicDigraph([1, 2, 3], D1_ARCS)


@pytest.fixture
def d2():
    return AcyclicDigraph([1, 2, 3], D2_ARCS)


@pytest.fixture
def d3():
    return AcyclicDigraph([1, 2, 3], D3_ARCS)


@pytest.fixture
def wedge():
    """Edge 13 plus the isolated vertex 2: the smallest graph with a witness."""
    return LabeledGraph(3, [(1, 3)])


@pytest.fixture
def p3():
    return LabeledGraph.path(3)


# filled by the acceptance tests, echoed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
