"""Label-preserving isomorphism: canonical certificates and automorphism groups.

Canonical forms use individualisation-refinement.  The ordered partition of
the vertices is refined by the multiset of ``(neighbour cell, edge label)``
pairs until stable; non-discrete partitions are split by individualising
each vertex of the first non-singleton cell in turn.  Every leaf of that
search tree gives a vertex ordering, and the certificate is the labeled
adjacency code of the leaf with the smallest (refinement trace, code) key.
Automorphisms discovered on the way prune sibling branches.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from math import prod

from .graphs import Graph, LabeledGraph

Key = tuple  # (order, ((u, v, label), ...)) with u < v, sorted


@dataclass(frozen=True)
class CanonicalCert:
    data: bytes
    order: int
    label_multiset: tuple


@dataclass(frozen=True)
class AutomorphismSet:
    generators: tuple  # of tuples: vertex v maps to gen[v]
    group_order: int


def graph_key(g: Graph | LabeledGraph) -> Key:
    if isinstance(g, LabeledGraph):
        return (g.order, tuple(sorted((u, v, lab) for (u, v), lab in g.labels.items())))
    return (g.order, tuple((u, v, 1) for u, v in g.sorted_edges))


def _structures(key: Key):
    n, triples = key
    nbrs = [[] for _ in range(n)]
    mat = [[0] * n for _ in range(n)]
    for u, v, lab in triples:
        nbrs[u].append((v, lab))
        nbrs[v].append((u, lab))
        mat[u][v] = mat[v][u] = lab
    return nbrs, mat


def _refine(cells: list, nbrs: list, n: int):
    """Refine an ordered partition to equitability; returns (cells, trace)."""
    trace = []
    cell_of = [0] * n
    while True:
        for i, c in enumerate(cells):
            for v in c:
                cell_of[v] = i
        new = []
        split = False
        for c in cells:
            if len(c) == 1:
                new.append(c)
                continue
            groups = {}
            for v in c:
                sig = tuple(sorted([(cell_of[u], lab) for u, lab in nbrs[v]]))
                groups.setdefault(sig, []).append(v)
            if len(groups) == 1:
                new.append(c)
                continue
            split = True
            sigs = sorted(groups)
            trace.append((len(new), tuple(len(groups[s]) for s in sigs), hash(tuple(sigs))))
            new.extend(groups[s] for s in sigs)
        cells = new
        if not split:
            return cells, tuple(trace)


def _individualize(cells: list, idx: int, v: int) -> list:
    rest = [w for w in cells[idx] if w != v]
    return cells[:idx] + [[v], rest] + cells[idx + 1:]


def _first_open(cells: list) -> int:
    for i, c in enumerate(cells):
        if len(c) > 1:
            return i
    return -1


def _orbit_reps(candidates: list, gens: list) -> dict:
    """Union-find the candidates under the given permutations; maps vertex -> root."""
    parent = {v: v for v in candidates}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for v in candidates:
            w = g[v]
            if w in parent:
                a, b = find(v), find(w)
                if a != b:
                    parent[max(a, b)] = min(a, b)
    return {v: find(v) for v in candidates}


class _CanonSearch:
    def __init__(self, key: Key):
        self.n = key[0]
        self.nbrs, self.mat = _structures(key)
        self.best_inv = None
        self.best_code = None
        self.best_perm = None
        self.first_inv = None
        self.first_code = None
        self.first_perm = None
        self.autos = []

    def code(self, perm):
        mat = self.mat
        n = self.n
        rows = [mat[v] for v in perm]
        return tuple(rows[i][perm[j]] for i in range(n) for j in range(i + 1, n))

    def run(self):
        if self.n == 0:
            return ()
        self.visit([list(range(self.n))], (), [], 0)
        return self.best_code

    def visit(self, cells, inv, fixed, cmp):
        # cmp: 0 = path invariant equal to best so far, -1 = already smaller
        cells, tr = _refine(cells, self.nbrs, self.n)
        depth = len(inv)
        inv = inv + (tr,)
        if self.best_inv is not None and cmp == 0:
            other = self.best_inv[depth]
            if tr > other:
                return
            if tr < other:
                cmp = -1
        idx = _first_open(cells)
        if idx < 0:
            self.leaf([c[0] for c in cells], inv, cmp)
            return
        target = list(cells[idx])
        explored = []
        for v in target:
            if explored and self.autos:
                gens = [g for g in self.autos if all(g[x] == x for x in fixed)]
                if gens:
                    roots = _orbit_reps(target, gens)
                    if any(roots[u] == roots[v] for u in explored):
                        continue
            explored.append(v)
            # best may have moved while earlier children were explored
            if self.best_inv is None or inv == self.best_inv[:depth + 1]:
                sub_cmp = 0
            else:
                sub_cmp = -1 if inv < self.best_inv[:depth + 1] else 1
            if sub_cmp == 1:
                return
            self.visit(_individualize(cells, idx, v), inv, fixed + [v], sub_cmp)

    def leaf(self, perm, inv, cmp):
        code = self.code(perm)
        if self.first_perm is None:
            self.first_perm, self.first_code, self.first_inv = perm, code, inv
            self.best_perm, self.best_code, self.best_inv = perm, code, inv
            return
        if inv == self.first_inv and code == self.first_code:
            self._record(self.first_perm, perm)
        if cmp == 0 and code == self.best_code:
            self._record(self.best_perm, perm)
            return
        if cmp < 0 or code < self.best_code:
            self.best_perm, self.best_code, self.best_inv = perm, code, inv

    def _record(self, a, b):
        g = [0] * self.n
        for x, y in zip(b, a):
            g[x] = y
        g = tuple(g)
        if any(g[i] != i for i in range(self.n)):
            self.autos.append(g)


@lru_cache(maxsize=1 << 18)
def _canonical_code(key: Key) -> tuple:
    return _CanonSearch(key).run()


def canonical_form(g: Graph | LabeledGraph) -> CanonicalCert:
    """Certificate equal for two inputs iff they are label-preserving isomorphic.

    Unlabeled graphs are treated as having every edge labeled 1.
    """
    key = graph_key(g)
    return cert_from_key(key)


def cert_from_key(key: Key) -> CanonicalCert:
    code = _canonical_code(key)
    data = f"{key[0]}:{','.join(map(str, code))}".encode()
    return CanonicalCert(data, key[0], tuple(sorted(t[2] for t in key[1])))


def are_isomorphic(a: Graph | LabeledGraph, b: Graph | LabeledGraph) -> bool:
    ka, kb = graph_key(a), graph_key(b)
    if ka[0] != kb[0] or len(ka[1]) != len(kb[1]):
        return False
    if sorted(t[2] for t in ka[1]) != sorted(t[2] for t in kb[1]):
        return False
    if _degree_sequence(ka) != _degree_sequence(kb):
        return False
    return _canonical_code(ka) == _canonical_code(kb)


def _degree_sequence(key: Key) -> list:
    deg = [0] * key[0]
    for u, v, _ in key[1]:
        deg[u] += 1
        deg[v] += 1
    return sorted(deg)


# --------------------------------------------------------------------------
# automorphism groups

def _is_automorphism(perm, key: Key, edge_labels: dict) -> bool:
    for u, v, lab in key[1]:
        a, b = perm[u], perm[v]
        if edge_labels.get((a, b) if a < b else (b, a)) != lab:
            return False
    return True


def _find_mapping(ca, cb, nbrs, n, key, edge_labels):
    ca, ta = _refine(ca, nbrs, n)
    cb, tb = _refine(cb, nbrs, n)
    if ta != tb or [len(c) for c in ca] != [len(c) for c in cb]:
        return None
    idx = _first_open(ca)
    if idx < 0:
        perm = [0] * n
        for x, y in zip(ca, cb):
            perm[x[0]] = y[0]
        return tuple(perm) if _is_automorphism(perm, key, edge_labels) else None
    x = ca[idx][0]
    # trying the identity image first yields transposition-like generators
    order = sorted(cb[idx], key=lambda y: (y != x, y))
    na = _individualize(ca, idx, x)
    for y in order:
        res = _find_mapping(na, _individualize(cb, idx, y), nbrs, n, key, edge_labels)
        if res is not None:
            return res
    return None


def automorphisms(g: Graph | LabeledGraph) -> AutomorphismSet:
    """Generators and exact order of the label-preserving automorphism group."""
    key = graph_key(g)
    n = key[0]
    nbrs, _ = _structures(key)
    edge_labels = {(u, v): lab for u, v, lab in key[1]}
    gens = []
    orbit_sizes = []
    cells, _ = _refine([list(range(n))], nbrs, n) if n else ([], ())
    while True:
        idx = _first_open(cells)
        if idx < 0:
            break
        b = cells[idx][0]
        orbit = {b}
        level_gens = []
        for w in cells[idx]:
            if w in orbit:
                continue
            perm = _find_mapping(_individualize(cells, idx, b), _individualize(cells, idx, w),
                                 nbrs, n, key, edge_labels)
            if perm is None:
                continue
            level_gens.append(perm)
            # close the orbit under the generators found at this level
            stack = list(orbit | {w})
            orbit.add(w)
            while stack:
                x = stack.pop()
                for p in level_gens:
                    if p[x] not in orbit:
                        orbit.add(p[x])
                        stack.append(p[x])
        gens.extend(level_gens)
        orbit_sizes.append(len(orbit))
        cells, _ = _refine(_individualize(cells, idx, b), nbrs, n)
    return AutomorphismSet(tuple(gens), prod(orbit_sizes))


# --------------------------------------------------------------------------
# brute-force oracle (all n! bijections)

@lru_cache(maxsize=1 << 16)
def brute_canonical_code(key: Key) -> tuple:
    """Lexicographically least labeled adjacency code over every vertex order."""
    n = key[0]
    _, mat = _structures(key)
    best = None
    for perm in permutations(range(n)):
        code = tuple(mat[perm[i]][perm[j]] for i in range(n) for j in range(i + 1, n))
        if best is None or code < best:
            best = code
    return best if best is not None else ()


def brute_isomorphic(a: Graph | LabeledGraph, b: Graph | LabeledGraph) -> bool:
    ka, kb = graph_key(a), graph_key(b)
    return ka[0] == kb[0] and brute_canonical_code(ka) == brute_canonical_code(kb)
