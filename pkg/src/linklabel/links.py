"""Links, active neighbourhoods and feasibility tests for link-irregular labelings."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .graphs import Graph, GraphError, LabeledGraph, write_graph6
from .iso import CanonicalCert, canonical_form

OK = "ok"
SAME_EDGES = "links-isomorphic-same-edges"
EMPTY_LINKS = "multiple-empty-links"
SAME_ACTIVE = "links-isomorphic-same-active-neighborhood"


@dataclass(frozen=True)
class LinkView:
    """The (labeled) link of ``center``.

    ``induced`` is renumbered 0..deg-1 following ascending ``members``;
    ``members[i]`` is the original id of induced vertex ``i``.
    """

    center: int
    members: tuple
    induced: LabeledGraph

    @property
    def original_edges(self) -> frozenset:
        m = self.members
        return frozenset((m[u], m[v]) for u, v in self.induced.graph.edges)

    @property
    def is_edgeless(self) -> bool:
        return not self.induced.graph.edges


@dataclass(frozen=True)
class FeasibilityReport:
    feasible: bool
    witness_pair: tuple | None = None
    reason: str = OK

    def __bool__(self):
        return self.feasible


@dataclass(frozen=True)
class NecessaryReport:
    distinct_neighborhoods: bool
    empty_link_counts: dict = field(default_factory=dict)
    equal_neighborhood_pair: tuple | None = None

    @property
    def holds(self) -> bool:
        return self.distinct_neighborhoods and all(c <= 1 for c in self.empty_link_counts.values())


def _base(g: Graph | LabeledGraph) -> LabeledGraph:
    return g if isinstance(g, LabeledGraph) else g.with_labels(1)


def labeled_link(lg: LabeledGraph, v: int) -> LinkView:
    if not 0 <= v < lg.order:
        raise GraphError(f"vertex {v} out of range for order {lg.order}")
    members = tuple(sorted(lg.graph.adjacency[v]))
    return LinkView(v, members, lg.induced(members))


def link(g: Graph, v: int) -> LinkView:
    """Unlabeled link; the induced graph carries label 1 on every edge."""
    return labeled_link(_base(g), v)


def active_neighborhood(g: Graph, v: int) -> frozenset:
    view = link(g, v)
    return frozenset(x for e in view.original_edges for x in e)


def _link_data(g: Graph):
    views = [link(g, v) for v in range(g.order)]
    certs = [canonical_form(view.induced) for view in views]
    return views, certs


def admits_labeling(g: Graph) -> FeasibilityReport:
    """Decide whether some labeling of ``g`` is link-irregular.

    Feasible iff no two vertices have isomorphic links on the same edge set;
    the witness is the lexicographically least violating pair.
    """
    views, certs = _link_data(g)
    groups: dict[tuple[CanonicalCert, frozenset], list[int]] = {}
    for v, view in enumerate(views):
        groups.setdefault((certs[v], view.original_edges), []).append(v)
    worst = None
    for (cert, edges), members in groups.items():
        if len(members) > 1:
            pair = (members[0], members[1])
            if worst is None or pair < worst[0]:
                worst = (pair, EMPTY_LINKS if not edges else SAME_EDGES)
    if worst is None:
        return FeasibilityReport(True)
    return FeasibilityReport(False, worst[0], worst[1])


def corollary_conditions(g: Graph) -> FeasibilityReport:
    """Literal evaluation of the active-neighbourhood criterion.

    A pair passes when its links are non-isomorphic, or when the active
    neighbourhoods differ and no two vertices share an edgeless link of the
    same order.
    """
    views, certs = _link_data(g)
    active = [frozenset(x for e in view.original_edges for x in e) for view in views]
    empty_orders = Counter(len(view.members) for view in views if view.is_edgeless)
    empty_ok = all(c <= 1 for c in empty_orders.values())
    for x in range(g.order):
        for y in range(x + 1, g.order):
            if certs[x] != certs[y]:
                continue
            if active[x] != active[y] and empty_ok:
                continue
            reason = EMPTY_LINKS if not empty_ok or views[x].is_edgeless else SAME_ACTIVE
            return FeasibilityReport(False, (x, y), reason)
    return FeasibilityReport(True)


def necessary_report(g: Graph) -> NecessaryReport:
    adj = g.adjacency
    seen = {}
    pair = None
    for v in range(g.order):
        if adj[v] in seen and pair is None:
            pair = (seen[adj[v]], v)
        seen.setdefault(adj[v], v)
    counts = Counter()
    for v in range(g.order):
        if link(g, v).is_edgeless:
            counts[len(adj[v])] += 1
    return NecessaryReport(pair is None, dict(sorted(counts.items())), pair)


def single_edge_link_count(g: Graph) -> int:
    """Number of vertices whose link is a single edge (K_2).

    Each such labeled link is determined by one label, so a link-irregular
    labeling needs at least this many distinct labels.
    """
    count = 0
    for v in range(g.order):
        if len(g.adjacency[v]) == 2:
            a, b = g.adjacency[v]
            count += g.has_edge(a, b)
    return count


def corollary_discrepancies(graphs) -> list[dict]:
    """Graphs where the active-neighbourhood criterion and the edge-set criterion disagree."""
    out = []
    for g in graphs:
        exact = admits_labeling(g)
        literal = corollary_conditions(g)
        if exact.feasible != literal.feasible:
            out.append({
                "graph": write_graph6(g),
                "check": "active-neighborhood-vs-edge-set",
                "details": {
                    "edge_set_criterion": exact.feasible,
                    "active_neighborhood_criterion": literal.feasible,
                    "pair": list(literal.witness_pair or exact.witness_pair or ()),
                    "reason": literal.reason if not literal.feasible else exact.reason,
                },
            })
    return out
