"""Explicit labelings: complete graphs, wheels, the H_n family and joins with cliques."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import cache
from math import comb

from .graphs import (Graph, GraphError, LabeledGraph, complete, copies, disjoint_union,
                     join, wheel)
from .links import admits_labeling, link, single_edge_link_count
from .solver import (EXHAUSTED, INF, EtaResult, check_labeling, eta, find_link_irregular_graphs,
                     is_cut_irregular)

__all__ = [
    "ConstructionError", "InfeasibleParameter", "PreconditionError", "TrailPlan",
    "FIG4_EDGES", "FIG3_SPOKES", "FIG3_ARCS", "fig4_graph", "is_cut_irregular", "g_family",
    "red_graph_to_labeling", "labeling_to_red_graph", "complete_labeling", "wheel_cap",
    "wheel_eta_formula", "kstar_trail_plan", "validate_plan", "trail_walk", "wheel_labeling",
    "wheel_labeling_from_spokes_list", "unique_li6", "companion_li7", "h_family",
    "join_expand_labeling", "strip_universal", "eta_via_universal_reduction",
]


class ConstructionError(RuntimeError):
    """A construction produced something that failed its own validation."""


class InfeasibleParameter(ValueError):
    pass


class PreconditionError(ValueError):
    def __init__(self, problems: list[str]):
        super().__init__("; ".join(problems))
        self.problems = problems


# A..F = 0..5
FIG4_EDGES = ((0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (2, 4), (4, 5))

FIG3_SPOKES = (1, 4, 4, 4, 2, 3, 5, 3, 3, 2, 1, 2, 5, 1, 5)
FIG3_ARCS = tuple((int(s[0]), int(s[1])) for s in
                  "11 12 22 23 33 34 44 45 55 51 13 35 52 24 41".split())

# colour -> label: black 1, red 2, blue 3
_SMALL_COMPLETE = {
    3: {(0, 1): 2, (1, 2): 1, (0, 2): 3},
    4: {(0, 1): 1, (0, 3): 1, (2, 3): 1, (1, 2): 2, (1, 3): 2, (0, 2): 3},
    5: {(0, 1): 1, (1, 2): 1, (1, 3): 1, (1, 4): 1, (2, 3): 1, (2, 4): 1,
        (0, 2): 2, (0, 3): 2, (3, 4): 2, (0, 4): 3},
}


def fig4_graph() -> Graph:
    return Graph.from_edges(6, FIG4_EDGES)


# --------------------------------------------------------------------------
# cut-irregular graphs and complete graphs

def g_family(n: int) -> Graph:
    """Cut-irregular graph on n >= 6 vertices.

    Odd steps join a new universal vertex; even steps hang a new leaf on the
    lowest-index vertex of minimum degree.
    """
    if n < 6:
        raise GraphError(f"g_family needs n >= 6, got {n}")
    g = fig4_graph()
    for k in range(7, n + 1):
        if k % 2:
            g = join(g, Graph(1))
        else:
            degs = g.degrees()
            z = degs.index(min(degs))
            g = Graph(k, g.edges | {(z, k - 1)})
    if not is_cut_irregular(g):
        raise ConstructionError(f"g_family({n}) is not cut-irregular")
    return g


def red_graph_to_labeling(g: Graph) -> LabeledGraph:
    """Complete graph on |g| vertices: edges of g get label 1, non-edges label 2."""
    kn = complete(g.order)
    return LabeledGraph(kn, {e: 1 if e in g.edges else 2 for e in kn.edges})


def labeling_to_red_graph(lg: LabeledGraph) -> Graph:
    n = lg.order
    if lg.graph.size != n * (n - 1) // 2:
        raise GraphError("labeling_to_red_graph needs a labeled complete graph")
    if lg.num_labels() != 2:
        raise GraphError(f"labeling_to_red_graph needs exactly 2 labels, got {lg.num_labels()}")
    red = min(lg.label_set())
    return Graph(n, frozenset(e for e, lab in lg.labels.items() if lab == red))


def complete_labeling(n: int) -> LabeledGraph:
    """Link-irregular labeling of K_n with the fewest labels (3 for n <= 5, else 2)."""
    if n <= 2:
        raise InfeasibleParameter(f"K_{n} has no link-irregular labeling with labels")
    if n in _SMALL_COMPLETE:
        lg = LabeledGraph(complete(n), _SMALL_COMPLETE[n])
    else:
        lg = red_graph_to_labeling(g_family(n))
    if not check_labeling(lg):
        raise ConstructionError(f"complete_labeling({n}) is not link-irregular")
    return lg


# --------------------------------------------------------------------------
# wheels

def wheel_cap(j: int) -> int:
    """Largest wheel size served by j labels."""
    return comb(j + 1, 2) if j % 2 else comb(j + 1, 2) - j // 2


def wheel_eta_formula(n: int):
    if n < 3:
        raise GraphError(f"wheel needs n >= 3, got {n}")
    exceptions = {3: 3, 4: INF, 6: 5, 8: 5}
    if n in exceptions:
        return exceptions[n]
    j = 3
    while n > wheel_cap(j):
        j += 1
    return j


@dataclass(frozen=True)
class TrailPlan:
    """Closed trails in K_r* given as arc sequences (a, b), a <= b; a == b is a loop."""

    r: int
    trails: tuple

    @property
    def arcs(self) -> list:
        return [a for t in self.trails for a in t]


def _norm(a: int, b: int) -> tuple:
    return (a, b) if a <= b else (b, a)


def trail_walk(arcs) -> list[int]:
    """Vertex sequence v0..v_{L-1} of a closed trail given by its arcs (v_L = v0)."""
    arcs = [_norm(*a) for a in arcs]
    if not arcs:
        raise ValueError("empty trail")
    for start in dict.fromkeys(arcs[0]):
        cur = start
        seq = []
        for a, b in arcs:
            if cur not in (a, b):
                break
            seq.append(cur)
            cur = b if cur == a else a
        else:
            if cur == start:
                return seq
    raise ValueError(f"arcs do not form a closed trail: {arcs}")


def validate_plan(plan: TrailPlan, n: int) -> list[list[int]]:
    """Check a plan for W_n and return the vertex sequence of each trail."""
    expected = 1 if n % 2 else 2
    if len(plan.trails) != expected:
        raise ValueError(f"W_{n} needs {expected} trail(s), plan has {len(plan.trails)}")
    arcs = [_norm(*a) for a in plan.arcs]
    if len(arcs) != n:
        raise ValueError(f"plan has {len(arcs)} arcs, W_{n} needs {n}")
    if len(set(arcs)) != len(arcs):
        raise ValueError("arcs repeat")
    if any(not 1 <= a <= b <= plan.r for a, b in arcs):
        raise ValueError(f"arc outside K_{plan.r}*")
    if expected == 2 and len(plan.trails[0]) != len(plan.trails[1]):
        raise ValueError("the two trails must have equal length")
    return [trail_walk(t) for t in plan.trails]


def _hierholzer(edges: list) -> list[int]:
    """Eulerian circuit (vertex sequence, closed) of a connected even edge list."""
    adj = defaultdict(list)
    for i, (a, b) in enumerate(edges):
        adj[a].append((b, i))
        if a != b:
            adj[b].append((a, i))
    for lst in adj.values():
        lst.sort(reverse=True)
    used = [False] * len(edges)
    start = min(min(e) for e in edges)
    stack, circuit = [start], []
    while stack:
        v = stack[-1]
        while adj[v] and used[adj[v][-1][1]]:
            adj[v].pop()
        if adj[v]:
            w, i = adj[v].pop()
            used[i] = True
            stack.append(w)
        else:
            circuit.append(stack.pop())
    circuit.reverse()
    return circuit[:-1]


def _is_connected_even(edges, vertices) -> bool:
    deg = defaultdict(int)
    adj = defaultdict(set)
    for a, b in edges:
        deg[a] += 2 if a == b else 1
        if a != b:
            deg[b] += 1
        adj[a].add(b)
        adj[b].add(a)
    if set(adj) != set(vertices) or any(d % 2 for d in deg.values()):
        return False
    seen = {min(vertices)}
    stack = list(seen)
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(vertices)


def _cycles(vertices, length, allowed):
    """Simple cycles of the given length over non-loop edges in ``allowed``."""
    vertices = sorted(vertices)

    def extend(path):
        if len(path) == length:
            if _norm(path[-1], path[0]) in allowed:
                yield [_norm(path[i], path[(i + 1) % length]) for i in range(length)]
            return
        for w in vertices:
            if w > path[0] and w not in path and _norm(path[-1], w) in allowed:
                if len(path) == length - 1 and w < path[1]:
                    continue  # each cycle once per direction
                yield from extend(path + [w])

    for s in vertices:
        yield from extend([s])


def _subsets(r: int, n: int):
    """Connected even n-edge subsets of K_r* touching every label, trimmed loops first."""
    labels = list(range(1, r + 1))
    base = [(a, b) for a in labels for b in labels if a <= b]
    if r % 2 == 0:
        matching = {(a, a + 1) for a in range(1, r, 2)}
        base = [e for e in base if e not in matching]
    d = len(base) - n
    if d < 0:
        return
    loops = [(a, a) for a in reversed(labels)]
    if d <= r:
        s = [e for e in base if e not in set(loops[:d])]
        if _is_connected_even(s, labels):
            yield s
    allowed = {e for e in base if e[0] != e[1]}
    for c in range(3, d + 1):
        nloops = d - c
        if nloops > r:
            continue
        drop_loops = set(loops[:nloops])
        for cyc in _cycles(labels, c, allowed):
            s = [e for e in base if e not in drop_loops and e not in set(cyc)]
            if _is_connected_even(s, labels):
                yield s


def _closed_subtrails(edges: list, length: int):
    """Closed trails with exactly ``length`` arcs inside ``edges`` (vertex sequences)."""
    adj = defaultdict(list)
    for a, b in edges:
        adj[a].append(b)
        if a != b:
            adj[b].append(a)
    used = set()

    def walk(seq):
        cur = seq[-1]
        if len(seq) == length + 1:
            if cur == seq[0]:
                yield seq[:-1]
            return
        for w in sorted(adj[cur]):
            e = _norm(cur, w)
            if e in used:
                continue
            used.add(e)
            yield from walk(seq + [w])
            used.discard(e)

    for s in sorted(adj):
        yield from walk([s])


def _arcs(seq: list[int]) -> tuple:
    return tuple(_norm(seq[i], seq[(i + 1) % len(seq)]) for i in range(len(seq)))


def kstar_trail_plan(r: int, n: int) -> TrailPlan:
    """One closed trail (odd n) or two equal edge-disjoint closed trails (even n) with n arcs in K_r*."""
    for s in _subsets(r, n):
        if n % 2:
            plan = TrailPlan(r, (_arcs(_hierholzer(s)),))
        else:
            plan = None
            for first in _closed_subtrails(s, n // 2):
                rest = [e for e in s if e not in set(_arcs(first))]
                if _is_connected_even(rest, sorted({x for e in rest for x in e})):
                    plan = TrailPlan(r, (_arcs(first), _arcs(_hierholzer(rest))))
                    break
            if plan is None:
                continue
        validate_plan(plan, n)
        return plan
    raise ConstructionError(f"no-plan: no trail plan for r={r}, n={n}")


def wheel_labeling_from_spokes_list(n: int, spokes) -> LabeledGraph:
    """W_n with spoke to rim vertex i labeled spokes[i-1]; rim edges labeled 1."""
    g = wheel(n)
    labels = {e: 1 for e in g.edges}
    for i, lab in enumerate(spokes, 1):
        labels[(0, i)] = lab
    return LabeledGraph(g, labels)


def wheel_labeling(n: int) -> LabeledGraph:
    """Link-irregular labeling of W_n using wheel_eta_formula(n) labels."""
    if n < 3:
        raise GraphError(f"wheel needs n >= 3, got {n}")
    if n == 4:
        raise InfeasibleParameter("W_4 admits no link-irregular labeling")
    if n == 3:
        lg = LabeledGraph(wheel(3), complete_labeling(4).labels)
    else:
        r = wheel_eta_formula(n)
        walks = validate_plan(kstar_trail_plan(r, n), n)
        spokes = [0] * n
        if n % 2:
            for k, lab in enumerate(walks[0]):
                spokes[2 * k % n] = lab
        else:
            for offset, seq in enumerate(walks):
                for k, lab in enumerate(seq):
                    spokes[2 * k + offset] = lab
        lg = wheel_labeling_from_spokes_list(n, spokes)
    if not check_labeling(lg) or lg.num_labels() != wheel_eta_formula(n):
        raise ConstructionError(f"wheel_labeling({n}) failed validation")
    return lg


# --------------------------------------------------------------------------
# graphs with prescribed labeling number

@cache
def unique_li6() -> Graph:
    found = find_link_irregular_graphs(6)
    if len(found) != 1:
        raise ConstructionError(f"expected one link-irregular graph of order 6, found {len(found)}")
    return found[0]


@cache
def companion_li7() -> Graph:
    """First order-7 link-irregular graph with exactly one K_2 link and no edgeless link.

    Stands in for the second copy of the order-6 graph when n = 2 (mod 3):
    that graph has a vertex with an edgeless link, so two copies of it
    can never be told apart.
    """
    for g in find_link_irregular_graphs(7):
        if single_edge_link_count(g) == 1 and not any(
                link(g, v).is_edgeless for v in range(g.order)):
            return g
    raise ConstructionError("no suitable order-7 link-irregular graph")


def h_family(n: int) -> tuple[Graph, LabeledGraph]:
    """A graph with labeling number exactly n and a labeling that attains it."""
    if n < 1:
        raise GraphError(f"h_family needs n >= 1, got {n}")
    k, rem = divmod(n, 3)
    parts = copies(complete(3), k)
    labels = {e: i + 1 for i, e in enumerate(parts.sorted_edges)}
    extras = [unique_li6(), companion_li7()][:rem]
    g = parts
    for offset, extra in enumerate(extras):
        shift = g.order
        g = disjoint_union(g, extra)
        for u, v in extra.edges:
            labels[(u + shift, v + shift)] = 3 * k + 1 + offset
    lg = LabeledGraph(g, labels)
    if not check_labeling(lg) or lg.num_labels() != n:
        raise ConstructionError(f"h_family({n}) failed validation")
    return g, lg


# --------------------------------------------------------------------------
# joins with complete graphs

def join_expand_labeling(g: Graph, lg: LabeledGraph, n: int) -> LabeledGraph:
    """Labeling of g v K_n reusing lg's labels: a labeling of K_n on the clique, cross edges one label."""
    problems = []
    if lg.graph != g:
        problems.append("labeling is not on the given graph")
    elif not check_labeling(lg):
        problems.append("labeling of g is not link-irregular")
    if g.order and g.max_degree() >= g.order - 1:
        problems.append(f"max degree {g.max_degree()} is not below |g|-1 = {g.order - 1}")
    used = sorted(lg.label_set())
    if n == 2 or n < 0:
        problems.append(f"K_{n} has no link-irregular labeling")
    elif n >= 3 and (3 if n <= 5 else 2) > len(used):
        problems.append(f"eta(K_{n}) exceeds the {len(used)} labels of g")
    if n >= 1 and not used and g.order:
        problems.append("g has no labels to reuse on cross edges")
    if problems:
        raise PreconditionError(problems)
    out = join(g, complete(n))
    labels = dict(lg.labels)
    shift = g.order
    if n >= 3:
        for (u, v), lab in complete_labeling(n).labels.items():
            labels[(u + shift, v + shift)] = used[lab - 1]
    for u in range(g.order):
        for v in range(n):
            labels[(u, v + shift)] = used[0]
    result = LabeledGraph(out, labels)
    if not check_labeling(result):
        raise ConstructionError("expanded labeling is not link-irregular")
    return result


def strip_universal(g: Graph) -> tuple[Graph, int]:
    """Remove every vertex of degree |g|-1; returns (remaining graph, number removed)."""
    universal = [v for v in range(g.order) if len(g.adjacency[v]) == g.order - 1]
    keep = [v for v in range(g.order) if v not in set(universal)]
    return g.induced(keep), len(universal)


def eta_via_universal_reduction(g: Graph, **kw) -> EtaResult:
    """eta(g), using the labeling lifted from g minus its universal vertices as an upper bound.

    The lift applies when the core has 3 <= eta < inf.  Its label count is only
    an upper bound: eta(g) can be far smaller than eta(core) (2K_3 v K_1 has
    eta 3, 2K_3 has 6), so the exact search still runs below it.  When that
    search finds nothing the lifted labeling is optimal.
    """
    core, count = strip_universal(g)
    if count == 0 or not admits_labeling(g):
        return eta(g, **kw)
    inner = eta(core, **kw)
    if not inner.finite or inner.value < 3:
        return eta(g, **kw)
    try:
        lifted = join_expand_labeling(core, inner.witness, count)
    except (PreconditionError, ConstructionError):
        return eta(g, **kw)
    # join(core, K_count) puts the clique last; map back to g's vertex ids
    universal = [v for v in range(g.order) if len(g.adjacency[v]) == g.order - 1]
    keep = [v for v in range(g.order) if v not in set(universal)]
    witness = lifted.permute(keep + universal)
    if witness.graph != g or not check_labeling(witness):
        raise ConstructionError("reduction witness failed validation")
    kw.pop("max_labels", None)
    below = eta(g, max_labels=inner.value - 1, **kw)
    if below.finite:
        return below
    return EtaResult(inner.value, witness, EXHAUSTED, method="universal-reduction",
                     nodes=inner.nodes + below.nodes)
