import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from linklabel.graphs import (DOT_PALETTE, FamilySpec, Graph, GraphError, LabeledGraph,
                              build_family, complete, complete_multipartite, copies, cycle,
                              disjoint_union, empty, export_dot, hypercube, join, parse_graph6,
                              parse_labeled, path, read_graph_file, star, wheel, write_graph6,
                              write_labeled)

from .conftest import graphs, labeled_graphs


def test_edges_are_normalised():
    g = Graph(3, frozenset({(2, 0), (1, 2)}))
    assert g.edges == {(0, 2), (1, 2)}
    assert g.sorted_edges == ((0, 2), (1, 2))


@pytest.mark.parametrize("order, edges", [(2, {(0, 0)}), (2, {(0, 2)}), (2, {(-1, 1)})])
def test_bad_edges_rejected(order, edges):
    with pytest.raises(GraphError):
        Graph(order, frozenset(edges))


@pytest.mark.parametrize("g, n, m", [
    (complete(5), 5, 10), (empty(4), 4, 0), (path(5), 5, 4), (cycle(6), 6, 6),
    (wheel(5), 6, 10), (star(4), 5, 4), (hypercube(3), 8, 12), (hypercube(4), 16, 32),
    (complete_multipartite(2, 3), 5, 6), (complete_multipartite(1, 1, 1), 3, 3),
])
def test_family_sizes(g, n, m):
    assert (g.order, g.size) == (n, m)


def test_wheel_layout():
    w = wheel(5)
    assert w.degree(0) == 5
    assert all(w.degree(v) == 3 for v in range(1, 6))
    assert w.has_edge(5, 1) and w.has_edge(1, 2)


def test_build_family():
    assert build_family(FamilySpec("cycle", (5,))) == cycle(5)
    assert build_family(FamilySpec("complete_multipartite", (2, 2))) == cycle(4).permute([0, 2, 1, 3])
    with pytest.raises(GraphError):
        build_family(FamilySpec("petersen", (10,)))
    with pytest.raises(GraphError):
        build_family(FamilySpec("cycle", (2,)))
    with pytest.raises(GraphError):
        build_family(FamilySpec("path", (-1,)))


@given(graphs(max_order=6), graphs(max_order=6))
def test_join_adds_all_cross_edges(g, h):
    j = join(g, h)
    u = disjoint_union(g, h)
    assert j.order == u.order == g.order + h.order
    assert j.size - u.size == g.order * h.order


def test_copies():
    two = copies(complete(3), 2)
    assert two.order == 6 and two.size == 6 and not two.is_connected()


def test_induced_and_delete():
    g = wheel(4)
    rim = g.induced([1, 2, 3, 4])
    assert rim == cycle(4)
    assert g.delete_vertex(0) == cycle(4)
    assert g.delete_vertex(1).order == 4


def test_connectivity_and_bipartiteness():
    assert cycle(6).is_bipartite() and not cycle(5).is_bipartite()
    assert hypercube(3).is_bipartite()
    assert not copies(complete(2), 2).is_connected()
    assert Graph(0).is_connected()


@given(graphs(max_order=7))
def test_complement_involution(g):
    assert g.complement().complement() == g
    assert g.size + g.complement().size == g.order * (g.order - 1) // 2


def test_distinct_labeling():
    lg = cycle(4).distinct_labeling()
    assert lg.num_labels() == 4
    assert [lg.labels[e] for e in lg.graph.sorted_edges] == [1, 2, 3, 4]


def test_labeled_graph_validation():
    g = path(3)
    with pytest.raises(GraphError):
        LabeledGraph(g, {(0, 1): 1})
    with pytest.raises(GraphError):
        LabeledGraph(g, {(0, 1): 0, (1, 2): 1})


# graph6 ----------------------------------------------------------------

def test_graph6_known_strings():
    assert write_graph6(complete(3)) == "Bw"
    assert write_graph6(Graph(0)) == "?"
    assert parse_graph6("Bw") == complete(3)
    assert parse_graph6(">>graph6<<Bw\n") == complete(3)


def test_graph6_random_round_trip():
    rng = random.Random(7)
    for _ in range(10_000):
        n = rng.randint(0, 12)
        p = rng.random()
        g = Graph(n, frozenset((u, v) for u in range(n) for v in range(u + 1, n)
                               if rng.random() < p))
        assert parse_graph6(write_graph6(g)) == g


def test_graph6_padding_bits_are_ignored():
    # like nauty, nonzero padding after the last edge bit is tolerated
    assert parse_graph6("Bx") == complete(3)


def test_graph6_long_form():
    g = path(70)
    s = write_graph6(g)
    assert s[0] == "~"
    assert parse_graph6(s) == g


@pytest.mark.parametrize("bad", ["", "B", "Bww", "B\x01", "~??", "~~???"])
def test_graph6_malformed(bad):
    with pytest.raises(GraphError, match="malformed graph6"):
        parse_graph6(bad)


# labeled text format ---------------------------------------------------

@given(labeled_graphs(max_order=9, max_label=20))
def test_labeled_round_trip(lg):
    assert parse_labeled(write_labeled(lg)) == lg


@pytest.mark.parametrize("text, fragment", [
    ("n 3\ne 0 1 1\ne 1 0 2\n", "duplicate edge"),
    ("n 3\ne 0 1 0\n", "label must be >= 1"),
    ("n 3\ne 0 3 1\n", "out of range"),
    ("n 3\ne 0 1\n", "missing label"),
    ("e 0 1 1\n", "header"),
    ("n x\n", "not an integer"),
    ("# only a comment\n", "missing header"),
])
def test_labeled_parse_errors(text, fragment):
    with pytest.raises(GraphError, match=fragment):
        parse_labeled(text)


def test_read_graph_file_sniffs_format():
    assert read_graph_file("# K3\nBw\n") == complete(3)
    lg = read_graph_file("n 2\ne 0 1 4\n")
    assert isinstance(lg, LabeledGraph) and lg.label(0, 1) == 4
    with pytest.raises(GraphError):
        read_graph_file("# nothing\n")


def test_dot_export():
    lg = LabeledGraph(path(3), {(0, 1): 1, (1, 2): 13})
    out = export_dot(lg, "P")
    assert out.startswith("graph P {")
    assert '0 -- 1 [label="1", color="black"]' in out
    assert f'1 -- 2 [label="13", color="{DOT_PALETTE[0]}"]' in out
    assert out.count("--") == 2


@given(labeled_graphs(max_order=6), st.data())
def test_permute_preserves_label_multiset(lg, data):
    perm = data.draw(st.permutations(list(range(lg.order))))
    p = lg.permute(perm)
    assert sorted(p.labels.values()) == sorted(lg.labels.values())
    assert sorted(p.graph.degrees()) == sorted(lg.graph.degrees())
