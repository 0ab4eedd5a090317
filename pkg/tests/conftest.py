from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from linklabel.graphs import Graph, LabeledGraph

settings.register_profile("default", deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def graphs(draw, min_order=0, max_order=8):
    n = draw(st.integers(min_order, max_order))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, frozenset(p for p, keep in zip(pairs, mask) if keep))


@st.composite
def labeled_graphs(draw, min_order=0, max_order=8, max_label=3):
    g = draw(graphs(min_order, max_order))
    labs = draw(st.lists(st.integers(1, max_label), min_size=g.size, max_size=g.size))
    return LabeledGraph(g, dict(zip(g.sorted_edges, labs)))


@st.composite
def permutations_of(draw, n):
    return draw(st.permutations(list(range(n))))


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance
    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
