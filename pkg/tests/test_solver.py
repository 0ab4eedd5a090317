import random

import pytest
from hypothesis import given, settings

from linklabel.constructions import (_SMALL_COMPLETE, FIG3_SPOKES, fig4_graph,
                                     labeling_to_red_graph, unique_li6,
                                     wheel_labeling_from_spokes_list)
from linklabel.graphs import (Graph, GraphError, LabeledGraph, complete, copies, cycle, path,
                              wheel)
from linklabel.iso import are_isomorphic
from linklabel.links import admits_labeling
from linklabel.solver import (EXHAUSTED, INF, INFEASIBLE, TRIVIAL, SearchBudgetExceeded,
                              SearchSpaceTooLarge, brute_eta, check_labeling, enumerate_graphs,
                              enumerate_trees, eta, exists_labeling_with,
                              find_cut_irregular_graphs, find_link_irregular_graphs,
                              integer_partitions, is_cut_irregular, wheel_structure)
from linklabel.verification import eta_brute_disagreements

from .conftest import graphs


def _rgs_ok(lg):
    seen = []
    for e in lg.graph.sorted_edges:
        lab = lg.labels[e]
        if lab not in seen:
            if lab != len(seen) + 1:
                return False
            seen.append(lab)
    return True


def test_check_labeling_examples():
    assert check_labeling(LabeledGraph(complete(4), _SMALL_COMPLETE[4]))
    res = check_labeling(complete(3).with_labels(1))
    assert not res and res.pair == (0, 1)
    assert check_labeling(wheel_labeling_from_spokes_list(15, FIG3_SPOKES))


def test_exists_labeling_examples():
    lg = exists_labeling_with(complete(6), 2)
    assert lg is not None and check_labeling(lg)
    assert is_cut_irregular(labeling_to_red_graph(lg))
    assert exists_labeling_with(complete(5), 2) is None
    for r in range(0, 6):
        assert exists_labeling_with(cycle(4), r) is None
    with pytest.raises(ValueError):
        exists_labeling_with(cycle(4), -1)


def test_eta_examples():
    assert eta(Graph(0)).value == 0
    r = eta(complete(1))
    assert r.value == 0 and r.evidence == TRIVIAL and r.witness is None
    r = eta(complete(2))
    assert r.value == INF and r.evidence == INFEASIBLE
    r = eta(complete(4))
    assert r.value == 3 and r.evidence == EXHAUSTED
    assert r.witness.num_labels() == 3 and check_labeling(r.witness)
    assert eta(unique_li6()).value == 1


def test_witness_is_restricted_growth():
    for g in (complete(4), complete(5), copies(complete(3), 2), fig4_graph().complement()):
        r = eta(g)
        assert _rgs_ok(r.witness)


def test_brute_examples():
    assert brute_eta(complete(3), 3).value == 3
    assert brute_eta(copies(complete(3), 2), 6).value == 6
    r = brute_eta(cycle(5), 4)
    assert r.value == INF and r.evidence == INFEASIBLE
    with pytest.raises(SearchSpaceTooLarge):
        brute_eta(complete(8), 3)
    with pytest.raises(ValueError):
        brute_eta(complete(3), 0)


def test_eta_matches_brute_force_suite():
    count, bad = eta_brute_disagreements()
    assert count > 50
    assert bad == []


@given(graphs(max_order=6))
@settings(max_examples=60)
def test_monotone_in_r(g):
    found = [exists_labeling_with(g, r) is not None for r in range(0, min(g.size, 5) + 1)]
    assert found == sorted(found)


def test_finite_iff_feasible_up_to_order_6():
    for n in range(0, 7):
        for g in enumerate_graphs(n):
            assert eta(g).finite == admits_labeling(g).feasible


@pytest.mark.parametrize("g", [complete(5), copies(complete(3), 2), wheel(6), fig4_graph(),
                               unique_li6()])
def test_eta_permutation_invariant(g):
    rng = random.Random(g.size)
    base = eta(g).value
    for _ in range(5):
        perm = list(range(g.order))
        rng.shuffle(perm)
        assert eta(g.permute(perm)).value == base


def test_symmetry_pruning_never_changes_decision():
    for n in range(2, 6):
        for g in enumerate_graphs(n):
            if not admits_labeling(g):
                continue
            a = eta(g)
            b = eta(g, use_symmetry=False)
            assert a.value == b.value
            assert a.witness == b.witness  # lex-least code survives pruning


@pytest.mark.parametrize("n", range(5, 9))
def test_wheel_fast_path_matches_generic(n):
    g = wheel(n)
    assert wheel_structure(g) is not None
    fast = eta(g)
    slow = eta(g, wheel_fast_path=False)
    assert fast.method == "wheel-spokes" and slow.method == "generic"
    assert fast.value == slow.value
    assert check_labeling(fast.witness) and fast.witness.num_labels() == fast.value


def test_wheel_structure_on_permuted_wheel():
    g = wheel(7).permute([3, 0, 1, 2, 4, 5, 6, 7])
    hub, rim = wheel_structure(g)
    assert hub == 3 and len(rim) == 7
    assert wheel_structure(cycle(8)) is None
    assert wheel_structure(wheel(4)) is None


def test_node_budget():
    with pytest.raises(SearchBudgetExceeded):
        eta(complete(5), node_budget=5)


def test_max_labels_bound():
    r = eta(complete(5), max_labels=2)
    assert r.value is None and not r.finite
    assert eta(complete(5), max_labels=3).value == 3


def test_censuses():
    assert [len(enumerate_graphs(n)) for n in range(0, 8)] == [1, 1, 2, 4, 11, 34, 156, 1044]
    assert [len(enumerate_trees(n)) for n in range(1, 9)] == [1, 1, 1, 2, 3, 6, 11, 23]
    for n in range(0, 6):
        assert find_link_irregular_graphs(n) == []
        assert find_cut_irregular_graphs(n) == []
    assert len(find_link_irregular_graphs(6)) == 1
    six = find_cut_irregular_graphs(6)
    assert any(are_isomorphic(g, fig4_graph()) for g in six)
    with pytest.raises(GraphError, match="order-too-large"):
        find_link_irregular_graphs(9)
    with pytest.raises(GraphError, match="order-too-large"):
        find_cut_irregular_graphs(9)


def test_cut_irregular_examples():
    assert is_cut_irregular(fig4_graph())
    assert not is_cut_irregular(path(3))
    assert not is_cut_irregular(cycle(6))


def test_integer_partitions():
    assert len(list(integer_partitions(7))) == 15
    assert list(integer_partitions(3)) == [(3,), (2, 1), (1, 1, 1)]
