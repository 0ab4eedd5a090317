"""Exact link-irregular labeling number.

Labelings are searched up to label renaming: a labeling is encoded as a
restricted-growth string over the edges in sorted order (entry ``i`` is the
block of edge ``i``; a new block is always the next unused index).  Codes are
explored in lexicographic order, so the first accepted code is the lex-least
one.  Two prunings keep the search small:

* as soon as every edge of a vertex's link has been assigned, its labeled
  link certificate is compared with those already fixed;
* a prefix is dropped when some automorphism of the graph maps it to a
  strictly smaller code prefix (the lex-least code of every orbit survives).
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from itertools import combinations, product

from .graphs import Graph, GraphError, LabeledGraph, complete_multipartite
from .iso import automorphisms, brute_canonical_code, canonical_form, cert_from_key
from .links import admits_labeling

log = logging.getLogger(__name__)

INF = math.inf

INFEASIBLE = "infeasible-by-link-criterion"
EXHAUSTED = "exhausted-r-minus-1"
TRIVIAL = "trivial-empty-graph"
ALL_LABELINGS = "exhausted-all-labelings"
BEYOND_BOUND = "exceeds-label-bound"

CENSUS_MAX_ORDER = 8
BRUTE_MAX_SPACE = 10**8


class SearchBudgetExceeded(RuntimeError):
    """The search visited more nodes than its budget allows."""


class SearchSpaceTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class CheckResult:
    valid: bool
    pair: tuple | None = None

    def __bool__(self):
        return self.valid


@dataclass
class EtaResult:
    value: float | int | None
    witness: LabeledGraph | None = None
    evidence: str = EXHAUSTED
    pair: tuple | None = None
    method: str = "generic"
    nodes: int = 0

    @property
    def finite(self) -> bool:
        return self.value is not None and self.value != INF


@dataclass
class SearchStats:
    nodes: int = 0
    link_prunes: int = 0
    symmetry_prunes: int = 0
    budget: int | None = None

    def tick(self):
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise SearchBudgetExceeded(f"node budget {self.budget} exhausted")


def _first_pair(values: list) -> tuple | None:
    seen = {}
    best = None
    for v, key in enumerate(values):
        if key in seen:
            pair = (seen[key], v)
            if best is None or pair < best:
                best = pair
        else:
            seen[key] = v
    return best


def link_key(lg: LabeledGraph, v: int) -> tuple:
    members = sorted(lg.graph.adjacency[v])
    index = {x: i for i, x in enumerate(members)}
    triples = sorted((index[a], index[b], lab) for (a, b), lab in lg.labels.items()
                     if a in index and b in index)
    return (len(members), tuple(triples))


def check_labeling(lg: LabeledGraph) -> CheckResult:
    """True iff all labeled links are pairwise non-isomorphic; else the least clashing pair."""
    certs = [cert_from_key(link_key(lg, v)) for v in range(lg.order)]
    pair = _first_pair(certs)
    return CheckResult(pair is None, pair)


def is_cut_irregular(g: Graph) -> CheckResult:
    """True iff the vertex-deleted subgraphs are pairwise non-isomorphic."""
    certs = [canonical_form(g.delete_vertex(v)) for v in range(g.order)]
    pair = _first_pair(certs)
    return CheckResult(pair is None, pair)


def decode(g: Graph, code) -> LabeledGraph:
    return LabeledGraph(g, {e: c + 1 for e, c in zip(g.sorted_edges, code)})


# --------------------------------------------------------------------------
# partition-code search

class _PartitionSearch:
    def __init__(self, g: Graph, r: int, stats: SearchStats, use_symmetry: bool = True):
        self.g = g
        self.r = r
        self.stats = stats
        edges = g.sorted_edges
        self.m = len(edges)
        eindex = {e: i for i, e in enumerate(edges)}
        self.links = []
        done_at = [[] for _ in range(self.m)]
        self.initial = []
        for v in range(g.order):
            members = sorted(g.adjacency[v])
            local = {x: i for i, x in enumerate(members)}
            ledges = [(eindex[(a, b)], local[a], local[b])
                      for a, b in combinations(members, 2) if (a, b) in eindex]
            self.links.append((len(members), ledges))
            if ledges:
                done_at[max(i for i, _, _ in ledges)].append(v)
            else:
                self.initial.append(v)
        self.done_at = done_at
        self.perms = self._edge_perms(edges, eindex) if use_symmetry else []

    def _edge_perms(self, edges, eindex):
        out = []
        for gen in automorphisms(self.g).generators:
            ep = [eindex[(min(gen[u], gen[v]), max(gen[u], gen[v]))] for u, v in edges]
            inv = [0] * self.m
            for i, j in enumerate(ep):
                inv[j] = i
            # determined[p]: length of the image prefix fixed once p edges are set
            determined = [0] * (self.m + 1)
            k = 0
            for p in range(self.m + 1):
                while k < self.m and inv[k] < p:
                    k += 1
                determined[p] = k
            out.append((inv, determined))
        return out

    def key_of(self, v, code):
        deg, ledges = self.links[v]
        return (deg, tuple((a, b, code[i] + 1) for i, a, b in ledges))

    def smaller_image(self, code, p):
        """True if some automorphism maps the length-p prefix to a smaller code prefix."""
        for inv, determined in self.perms:
            k = determined[p]
            if k == 0:
                continue
            remap = {}
            for j in range(k):
                c = code[inv[j]]
                img = remap.setdefault(c, len(remap))
                if img != code[j]:
                    if img < code[j]:
                        return True
                    break
        return False

    def run(self):
        if self.m == 0:
            certs = [cert_from_key(self.key_of(v, ())) for v in range(self.g.order)]
            return () if _first_pair(certs) is None else None
        if self.r < 1:
            return None
        fixed = {}
        for v in self.initial:
            cert = cert_from_key(self.key_of(v, ()))
            if cert in fixed:
                return None
            fixed[cert] = v
        code = [0] * self.m
        found = self._dfs(code, 0, 0, fixed)
        return tuple(code) if found else None

    def _dfs(self, code, pos, blocks, fixed):
        if pos == self.m:
            return True
        stats = self.stats
        for c in range(min(blocks + 1, self.r)):
            stats.tick()
            code[pos] = c
            if self.perms and self.smaller_image(code, pos + 1):
                stats.symmetry_prunes += 1
                continue
            added = []
            clash = False
            for v in self.done_at[pos]:
                cert = cert_from_key(self.key_of(v, code))
                if cert in fixed:
                    clash = True
                    break
                fixed[cert] = v
                added.append(cert)
            if not clash and self._dfs(code, pos + 1, max(blocks, c + 1), fixed):
                return True
            if clash:
                stats.link_prunes += 1
            for cert in added:
                del fixed[cert]
        return False


def exists_labeling_with(g: Graph, r: int, *, node_budget: int | None = None,
                         stats: SearchStats | None = None,
                         use_symmetry: bool = True) -> LabeledGraph | None:
    """A link-irregular labeling using at most ``r`` labels, or None.

    The witness is the lex-least accepting partition code, labels 1..r in
    block order.
    """
    if r < 0:
        raise ValueError("r must be >= 0")
    stats = stats or SearchStats(budget=node_budget)
    if not admits_labeling(g):
        return None
    if r < 1 and g.size:
        return None
    code = _PartitionSearch(g, r, stats, use_symmetry).run()
    log.debug("search r=%d nodes=%d link-prunes=%d sym-prunes=%d",
              r, stats.nodes, stats.link_prunes, stats.symmetry_prunes)
    return None if code is None else decode(g, code)


# --------------------------------------------------------------------------
# wheels: only the spoke labels matter

def wheel_structure(g: Graph) -> tuple[int, list[int]] | None:
    """(hub, rim order) when g is a wheel W_n with n >= 5, else None."""
    n = g.order - 1
    if n < 5 or g.size != 2 * n:
        return None
    hubs = [v for v in range(g.order) if len(g.adjacency[v]) == n]
    if len(hubs) != 1:
        return None
    hub = hubs[0]
    rim_nbrs = {v: g.adjacency[v] - {hub} for v in range(g.order) if v != hub}
    if any(len(s) != 2 for s in rim_nbrs.values()):
        return None
    start = min(rim_nbrs)
    order = [start]
    prev, cur = start, min(rim_nbrs[start])
    while cur != start:
        order.append(cur)
        prev, cur = cur, next(x for x in rim_nbrs[cur] if x != prev)
    return (hub, order) if len(order) == n else None


def spoke_codes_search(n: int, r: int, stats: SearchStats) -> tuple | None:
    """Lex-least RGS of spoke labels whose rim links {s[i-1], s[i+1]} are all distinct."""
    if r * (r + 1) // 2 < n:
        return None
    s = [0] * n
    used = set()

    def pair(a, b):
        return (a, b) if a <= b else (b, a)

    def dfs(pos, blocks):
        if pos == n:
            last = [pair(s[n - 2], s[0]), pair(s[n - 1], s[1])]
            return last[0] != last[1] and not used.intersection(last)
        for c in range(min(blocks + 1, r)):
            stats.tick()
            s[pos] = c
            p = pair(s[pos - 2], c) if pos >= 2 else None
            if p is not None:
                if p in used:
                    stats.link_prunes += 1
                    continue
                used.add(p)
            if dfs(pos + 1, max(blocks, c + 1)):
                return True
            if p is not None:
                used.discard(p)
        return False

    return tuple(s) if dfs(0, 0) else None


def wheel_labeling_from_spokes(g: Graph, hub: int, rim: list[int], spokes) -> LabeledGraph:
    labels = {e: 1 for e in g.edges}
    for v, c in zip(rim, spokes):
        labels[(min(hub, v), max(hub, v))] = c + 1
    return LabeledGraph(g, labels)


def _wheel_eta(g: Graph, hub: int, rim: list[int], stats: SearchStats) -> EtaResult:
    n = len(rim)
    for r in range(1, n + 1):
        spokes = spoke_codes_search(n, r, stats)
        if spokes is not None:
            lg = wheel_labeling_from_spokes(g, hub, rim, spokes)
            assert check_labeling(lg), "wheel spoke reduction produced an invalid labeling"
            return EtaResult(r, lg, EXHAUSTED, method="wheel-spokes", nodes=stats.nodes)
    raise AssertionError("all-distinct spoke labels always succeed")


# --------------------------------------------------------------------------
# eta

def eta(g: Graph, *, node_budget: int | None = None, max_labels: int | None = None,
        wheel_fast_path: bool = True, use_symmetry: bool = True) -> EtaResult:
    """Exact link-irregular labeling number of ``g``.

    Returns value 0 for graphs of order <= 1, infinity when no labeling is
    link-irregular, else the least r with an r-labeling plus that witness.
    With ``max_labels`` the search stops early and reports value None.
    """
    stats = SearchStats(budget=node_budget)
    if g.order <= 1:
        return EtaResult(0, None, TRIVIAL)
    report = admits_labeling(g)
    if not report:
        return EtaResult(INF, None, INFEASIBLE, pair=report.witness_pair)
    if wheel_fast_path:
        wheel = wheel_structure(g)
        if wheel is not None:
            return _wheel_eta(g, *wheel, stats)
    top = g.size if max_labels is None else min(max_labels, g.size)
    for r in range(1, top + 1):
        code = _PartitionSearch(g, r, stats, use_symmetry).run()
        log.info("eta search r=%d: %s after %d nodes", r, "found" if code else "none", stats.nodes)
        if code is not None:
            return EtaResult(r, decode(g, code), EXHAUSTED, nodes=stats.nodes)
    if max_labels is not None and max_labels < g.size:
        return EtaResult(None, None, BEYOND_BOUND, nodes=stats.nodes)
    raise AssertionError("distinct labels on every edge must succeed for feasible graphs")


def brute_eta(g: Graph, r_max: int) -> EtaResult:
    """Oracle: plain enumeration of all maps E -> {1..r}, links compared by brute force."""
    if r_max < 1:
        raise ValueError("r_max must be >= 1")
    m = g.size
    if r_max ** m > BRUTE_MAX_SPACE:
        raise SearchSpaceTooLarge(f"{r_max}^{m} labelings exceed {BRUTE_MAX_SPACE}")
    if g.order <= 1:
        return EtaResult(0, None, TRIVIAL)
    edges = g.sorted_edges
    members = [sorted(g.adjacency[v]) for v in range(g.order)]
    link_edges = []
    for v in range(g.order):
        local = {x: i for i, x in enumerate(members[v])}
        link_edges.append([(k, local[a], local[b]) for k, (a, b) in enumerate(edges)
                           if a in local and b in local])
    if m == 0:
        codes = [brute_canonical_code((len(members[v]), ())) for v in range(g.order)]
        ok = len(set(zip(codes, map(len, members)))) == g.order
        return EtaResult(0 if ok else INF, None, TRIVIAL if ok else ALL_LABELINGS)
    for r in range(1, r_max + 1):
        for labels in product(range(1, r + 1), repeat=m):
            seen = set()
            for v in range(g.order):
                key = (len(members[v]), tuple((a, b, labels[k]) for k, a, b in link_edges[v]))
                sig = (key[0], brute_canonical_code(key))
                if sig in seen:
                    break
                seen.add(sig)
            else:
                return EtaResult(r, LabeledGraph(g, dict(zip(edges, labels))), EXHAUSTED,
                                 method="brute-force")
    if r_max >= m:
        return EtaResult(INF, None, ALL_LABELINGS, method="brute-force")
    if not admits_labeling(g):
        return EtaResult(INF, None, INFEASIBLE, method="brute-force")
    return EtaResult(None, None, BEYOND_BOUND, method="brute-force")


# --------------------------------------------------------------------------
# small-graph enumeration

_CENSUS: dict[int, list[Graph]] = {0: [Graph(0)]}


def enumerate_graphs(order: int) -> list[Graph]:
    """One representative per isomorphism class, built by vertex augmentation."""
    if order < 0:
        raise ValueError("order must be >= 0")
    if order > CENSUS_MAX_ORDER:
        raise GraphError(f"order-too-large: enumeration limited to order {CENSUS_MAX_ORDER}")
    if order not in _CENSUS:
        seen = {}
        new = order - 1
        for g in enumerate_graphs(new):
            for mask in range(1 << new):
                extra = [(u, new) for u in range(new) if mask >> u & 1]
                h = Graph(order, g.edges | frozenset(extra))
                seen.setdefault(canonical_form(h), h)
        _CENSUS[order] = list(seen.values())
    return _CENSUS[order]


def enumerate_trees(order: int) -> list[Graph]:
    """Trees up to isomorphism, grown one leaf at a time."""
    if order <= 0:
        return []
    trees = [Graph(1)]
    for n in range(2, order + 1):
        seen = {}
        for t in trees:
            for v in range(n - 1):
                h = Graph(n, t.edges | {(v, n - 1)})
                seen.setdefault(canonical_form(h), h)
        trees = list(seen.values())
    return trees


def integer_partitions(n: int, largest: int | None = None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in integer_partitions(n - first, first):
            yield (first,) + rest


def multipartite_with_big_part(order: int) -> list[Graph]:
    """Complete multipartite graphs with a part of size >= 2 (one part gives an empty graph)."""
    return [complete_multipartite(*p) for p in integer_partitions(order)
            if p[0] >= 2]


def find_link_irregular_graphs(order: int) -> list[Graph]:
    """Isomorphism classes of the given order with pairwise non-isomorphic links.

    The one-vertex graph is excluded (it is trivial, with eta 0 rather than 1).
    """
    if order > CENSUS_MAX_ORDER:
        raise GraphError(f"order-too-large: {order} > {CENSUS_MAX_ORDER}")
    if order < 2:
        return []
    return [g for g in enumerate_graphs(order) if check_labeling(g.with_labels(1))]


def find_cut_irregular_graphs(order: int) -> list[Graph]:
    """Isomorphism classes with pairwise non-isomorphic vertex-deleted subgraphs (order >= 2)."""
    if order > CENSUS_MAX_ORDER:
        raise GraphError(f"order-too-large: {order} > {CENSUS_MAX_ORDER}")
    if order < 2:
        return []
    return [g for g in enumerate_graphs(order) if is_cut_irregular(g)]
