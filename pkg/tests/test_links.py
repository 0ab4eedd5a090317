import pytest
from hypothesis import given
from hypothesis import strategies as st

from linklabel.constructions import fig4_graph
from linklabel.graphs import (Graph, GraphError, LabeledGraph, complete, complete_multipartite,
                              copies, cycle, star, wheel)
from linklabel.iso import are_isomorphic
from linklabel.links import (EMPTY_LINKS, OK, SAME_EDGES, active_neighborhood, admits_labeling,
                             corollary_conditions, corollary_discrepancies, labeled_link, link,
                             necessary_report, single_edge_link_count)
from linklabel.solver import check_labeling, enumerate_graphs

from .conftest import graphs, labeled_graphs


def test_link_of_complete_graph():
    lg = complete(5).distinct_labeling()
    view = labeled_link(lg, 2)
    assert view.members == (0, 1, 3, 4)
    assert view.induced.graph == complete(4)
    # labels are copied from the base graph
    assert view.induced.label(2, 3) == lg.label(3, 4)


def test_rim_link_of_wheel_is_spoke_path():
    g = wheel(6)
    labels = {e: 1 for e in g.edges}
    labels[(0, 2)], labels[(0, 6)] = 4, 7
    view = labeled_link(LabeledGraph(g, labels), 1)
    assert view.members == (0, 2, 6)
    assert view.original_edges == {(0, 2), (0, 6)}
    assert sorted(view.induced.labels.values()) == [4, 7]


def test_cycle_link_is_edgeless():
    view = link(cycle(5), 0)
    assert view.is_edgeless and len(view.members) == 2


def test_vertex_out_of_range():
    with pytest.raises(GraphError):
        link(cycle(5), 5)


def test_active_neighbourhoods():
    assert active_neighborhood(cycle(4), 0) == frozenset()
    assert active_neighborhood(complete(4), 0) == {1, 2, 3}
    # E = 4 in the A..F numbering; F is isolated inside L(E)
    assert active_neighborhood(fig4_graph(), 4) == {0, 1, 2}


def test_admits_labeling_examples():
    assert admits_labeling(complete(6)).feasible
    for n in range(4, 9):
        rep = admits_labeling(cycle(n))
        assert not rep and rep.reason == EMPTY_LINKS
    rep = admits_labeling(wheel(4))
    assert rep.witness_pair == (1, 3) and rep.reason == SAME_EDGES
    assert admits_labeling(copies(complete(3), 2)).reason == OK


def test_report_witness_iff_infeasible():
    for n in range(1, 6):
        for g in enumerate_graphs(n):
            rep = admits_labeling(g)
            assert (rep.witness_pair is None) == rep.feasible


def test_corollary_examples():
    assert corollary_conditions(complete(6)).feasible
    assert corollary_conditions(copies(complete(3), 2)).feasible
    assert not corollary_conditions(cycle(6)).feasible


def test_corollary_agrees_up_to_order_6():
    graphs = [g for n in range(2, 7) for g in enumerate_graphs(n)]
    assert corollary_discrepancies(graphs) == []


def test_necessary_report_examples():
    rep = necessary_report(complete_multipartite(2, 3))
    assert not rep.distinct_neighborhoods and not rep.holds
    rep = necessary_report(complete(5))
    assert rep.distinct_neighborhoods and rep.empty_link_counts == {}
    rep = necessary_report(star(3))
    assert rep.empty_link_counts == {1: 3, 3: 1}


@given(graphs(max_order=7))
def test_feasible_implies_necessary_conditions(g):
    if admits_labeling(g):
        assert necessary_report(g).holds


@given(graphs(max_order=7))
def test_oracle_equivalence(g):
    assert admits_labeling(g).feasible == bool(check_labeling(g.distinct_labeling()))


@given(labeled_graphs(min_order=1, max_order=7), st.permutations([1, 2, 3]), st.data())
def test_links_commute_with_label_bijection(lg, sigma, data):
    m = {i + 1: s for i, s in enumerate(sigma)}
    v = data.draw(st.integers(0, lg.order - 1))
    assert labeled_link(lg.relabel(m), v).induced == labeled_link(lg, v).induced.relabel(m)


def test_single_edge_links():
    assert single_edge_link_count(copies(complete(3), 2)) == 6
    assert single_edge_link_count(cycle(5)) == 0
    assert single_edge_link_count(Graph(3, frozenset({(0, 1), (1, 2)}))) == 0


def test_link_members_are_neighbours():
    g = fig4_graph()
    for v in range(g.order):
        view = link(g, v)
        assert set(view.members) == g.neighbors(v)
        assert are_isomorphic(view.induced, g.induced(view.members).with_labels(1))
