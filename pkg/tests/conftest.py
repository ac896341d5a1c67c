import pytest
from hypothesis import strategies as st

from convexkit.graph import Graph, complete_graph, cycle_graph, path_graph


def S(*vs):
    """Vertex bitmask from arguments."""
    mask = 0
    for v in vs:
        mask |= 1 << v
    return mask


P4 = path_graph(4)
C4 = cycle_graph(4)
C5 = cycle_graph(5)
K3 = complete_graph(3)
K4 = complete_graph(4)
# two disjoint edges 02, 13: the complement of C4
TWO_K2 = Graph.from_edges(4, [(0, 2), (1, 3)])
STAR = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
BOWTIE = Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])


@st.composite
def graphs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    code = draw(st.integers(0, 2 ** (n * (n - 1) // 2) - 1))
    return Graph.from_code(n, code)


@st.composite
def graph_and_set(draw, min_n=1, max_n=7):
    g = draw(graphs(min_n, max_n))
    s = draw(st.integers(0, g.full))
    return g, s


def set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [part[i] | 1 << first] + part[i + 1:]
        yield part + [1 << first]


@pytest.fixture(autouse=True)
def _no_cap_override(monkeypatch):
    monkeypatch.delenv("CONVEXKIT_MAX_N", raising=False)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
