"""Graph and labeled-graph value types, standard families and serialization.

Vertices are always the contiguous range ``0..order-1`` and edges are stored
as sorted pairs ``(u, v)`` with ``u < v``.  Both types are immutable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Mapping

import networkx as nx

Edge = tuple[int, int]

MAX_ORDER = 1 << 16

# Fixed 12-colour palette for DOT output, cycled by label.
DOT_PALETTE = (
    "black", "red", "blue", "darkgreen", "orange", "purple",
    "brown", "magenta", "cyan4", "gold3", "gray40", "navy",
)


class GraphError(ValueError):
    """Invalid graph parameters or malformed graph input."""


def _edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..order-1``."""

    order: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if not 0 <= self.order <= MAX_ORDER:
            raise GraphError(f"order out of range: {self.order}")
        normalized = set()
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < self.order and 0 <= v < self.order):
                raise GraphError(f"edge ({u}, {v}) out of range for order {self.order}")
            normalized.add(_edge(u, v))
        object.__setattr__(self, "edges", frozenset(normalized))

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[Edge]) -> "Graph":
        return cls(order, frozenset(edges))

    @cached_property
    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def adjacency(self) -> tuple[frozenset, ...]:
        nbrs = [set() for _ in range(self.order)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @property
    def size(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> frozenset:
        self._check_vertex(v)
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def degrees(self) -> list[int]:
        return [len(s) for s in self.adjacency]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return _edge(u, v) in self.edges

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.order:
            raise GraphError(f"vertex {v} out of range for order {self.order}")

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph, renumbered in ascending order of the kept vertices."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        return Graph(len(keep), frozenset(
            (index[u], index[v]) for u, v in self.edges if u in index and v in index
        ))

    def delete_vertex(self, v: int) -> "Graph":
        self._check_vertex(v)
        return self.induced(u for u in range(self.order) if u != v)

    def permute(self, perm: list[int]) -> "Graph":
        """Rename vertex ``v`` to ``perm[v]``."""
        return Graph(self.order, frozenset(_edge(perm[u], perm[v]) for u, v in self.edges))

    def complement(self) -> "Graph":
        return Graph(self.order, frozenset(combinations(range(self.order), 2)) - self.edges)

    def is_connected(self) -> bool:
        if self.order == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            for w in self.adjacency[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.order

    def is_bipartite(self) -> bool:
        side = {}
        for s in range(self.order):
            if s in side:
                continue
            side[s] = 0
            stack = [s]
            while stack:
                u = stack.pop()
                for w in self.adjacency[u]:
                    if w not in side:
                        side[w] = 1 - side[u]
                        stack.append(w)
                    elif side[w] == side[u]:
                        return False
        return True

    def with_labels(self, labels: Mapping[Edge, int] | int = 1) -> "LabeledGraph":
        """Attach labels; an int labels every edge with that value."""
        if isinstance(labels, int):
            labels = {e: labels for e in self.edges}
        return LabeledGraph(self, labels)

    def distinct_labeling(self) -> "LabeledGraph":
        """Label edges 1..m in sorted edge order."""
        return LabeledGraph(self, {e: i + 1 for i, e in enumerate(self.sorted_edges)})


@dataclass(frozen=True)
class LabeledGraph:
    """A graph with a positive integer label on every edge."""

    graph: Graph
    labels: Mapping[Edge, int]

    def __post_init__(self):
        labels = {}
        for (u, v), lab in self.labels.items():
            e = _edge(u, v)
            if e not in self.graph.edges:
                raise GraphError(f"label given for non-edge {e}")
            if e in labels:
                raise GraphError(f"duplicate label for edge {e}")
            if not isinstance(lab, int) or lab < 1:
                raise GraphError(f"label for edge {e} must be a positive integer, got {lab!r}")
            labels[e] = lab
        missing = self.graph.edges - labels.keys()
        if missing:
            raise GraphError(f"missing labels for edges {sorted(missing)}")
        object.__setattr__(self, "labels", labels)

    def __hash__(self):
        return hash((self.graph, frozenset(self.labels.items())))

    @property
    def order(self) -> int:
        return self.graph.order

    def label(self, u: int, v: int) -> int:
        return self.labels[_edge(u, v)]

    def label_set(self) -> set[int]:
        return set(self.labels.values())

    def num_labels(self) -> int:
        return len(set(self.labels.values()))

    def relabel(self, mapping: Mapping[int, int]) -> "LabeledGraph":
        """Apply a map on label values."""
        return LabeledGraph(self.graph, {e: mapping[lab] for e, lab in self.labels.items()})

    def permute(self, perm: list[int]) -> "LabeledGraph":
        return LabeledGraph(
            self.graph.permute(perm),
            {_edge(perm[u], perm[v]): lab for (u, v), lab in self.labels.items()},
        )

    def induced(self, vertices: Iterable[int]) -> "LabeledGraph":
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        return LabeledGraph(
            Graph(len(keep), frozenset(
                (index[u], index[v]) for u, v in self.graph.edges if u in index and v in index
            )),
            {(index[u], index[v]): lab for (u, v), lab in self.labels.items()
             if u in index and v in index},
        )


# --------------------------------------------------------------------------
# families and operations

FAMILY_KINDS = ("complete", "cycle", "path", "wheel", "hypercube",
                "complete_multipartite", "empty", "star")


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple = ()


def complete(n: int) -> Graph:
    return Graph(n, frozenset(combinations(range(n), 2)))


def empty(n: int) -> Graph:
    return Graph(n)


def path(n: int) -> Graph:
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    return Graph(n, frozenset(_edge(i, (i + 1) % n) for i in range(n)))


def wheel(n: int) -> Graph:
    """W_n: hub 0 joined to the rim cycle 1..n (in cyclic order)."""
    if n < 3:
        raise GraphError(f"wheel needs n >= 3, got {n}")
    rim = [(i, i % n + 1) for i in range(1, n + 1)]
    spokes = [(0, i) for i in range(1, n + 1)]
    return Graph(n + 1, frozenset(spokes + rim))


def star(n: int) -> Graph:
    """K_{1,n} with centre 0."""
    return Graph(n + 1, frozenset((0, i) for i in range(1, n + 1)))


def hypercube(d: int) -> Graph:
    if d < 0:
        raise GraphError(f"hypercube dimension must be >= 0, got {d}")
    n = 1 << d
    return Graph(n, frozenset((v, v ^ (1 << b)) for v in range(n) for b in range(d) if not v >> b & 1))


def complete_multipartite(*parts: int) -> Graph:
    if not parts or any(p < 1 for p in parts):
        raise GraphError(f"complete multipartite needs non-empty positive parts, got {parts}")
    owner = [i for i, p in enumerate(parts) for _ in range(p)]
    n = len(owner)
    return Graph(n, frozenset((u, v) for u, v in combinations(range(n), 2) if owner[u] != owner[v]))


def build_family(spec: FamilySpec) -> Graph:
    builders = {
        "complete": complete, "cycle": cycle, "path": path, "wheel": wheel,
        "hypercube": hypercube, "complete_multipartite": complete_multipartite,
        "empty": empty, "star": star,
    }
    if spec.kind not in builders:
        raise GraphError(f"unknown family {spec.kind!r}")
    if spec.kind != "complete_multipartite" and len(spec.params) != 1:
        raise GraphError(f"family {spec.kind!r} takes one parameter, got {spec.params}")
    if spec.kind != "complete_multipartite" and spec.params[0] < 0:
        raise GraphError(f"negative parameter for {spec.kind!r}")
    return builders[spec.kind](*spec.params)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    k = g.order
    return Graph(k + h.order, g.edges | {(u + k, v + k) for u, v in h.edges})


def join(g: Graph, h: Graph) -> Graph:
    k = g.order
    cross = {(u, k + v) for u in range(g.order) for v in range(h.order)}
    return Graph(k + h.order, disjoint_union(g, h).edges | cross)


def copies(g: Graph, k: int) -> Graph:
    out = Graph(0)
    for _ in range(k):
        out = disjoint_union(out, g)
    return out


def labeled_union(a: LabeledGraph, b: LabeledGraph) -> LabeledGraph:
    k = a.order
    labels = dict(a.labels)
    labels.update({(u + k, v + k): lab for (u, v), lab in b.labels.items()})
    return LabeledGraph(disjoint_union(a.graph, b.graph), labels)


# --------------------------------------------------------------------------
# graph6

def write_graph6(g: Graph) -> str:
    if g.order > 258047:
        raise GraphError(f"graph6 cannot encode order {g.order}")
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.order))
    nxg.add_edges_from(g.edges)
    return nx.to_graph6_bytes(nxg, header=False).decode().strip()


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphError("malformed graph6: empty input")
    bad = [ch for ch in s if not 63 <= ord(ch) <= 126]
    if bad:
        raise GraphError(f"malformed graph6: character {bad[0]!r} outside 63..126")
    if s.startswith("~~"):
        raise GraphError("malformed graph6: orders above 258047 are unsupported")
    try:
        nxg = nx.from_graph6_bytes(s.encode())
    except (nx.NetworkXError, IndexError, ValueError) as exc:
        raise GraphError(f"malformed graph6: {exc or 'truncated order header'}") from None
    return Graph(nxg.number_of_nodes(), frozenset(nxg.edges()))


# --------------------------------------------------------------------------
# labeled edge-list text format

def write_labeled(lg: LabeledGraph) -> str:
    lines = [f"n {lg.order}"]
    lines += [f"e {u} {v} {lg.labels[(u, v)]}" for u, v in lg.graph.sorted_edges]
    return "\n".join(lines) + "\n"


def parse_labeled(text: str) -> LabeledGraph:
    order = None
    labels = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if order is None:
            if parts[0] != "n" or len(parts) != 2:
                raise GraphError(f"line {lineno}: expected header 'n <order>'")
            order = _int(parts[1], lineno)
            if order < 0:
                raise GraphError(f"line {lineno}: negative order")
            continue
        if parts[0] != "e":
            raise GraphError(f"line {lineno}: unknown record {parts[0]!r}")
        if len(parts) != 4:
            raise GraphError(f"line {lineno}: expected 'e <u> <v> <label>' (missing label?)")
        u, v, lab = (_int(p, lineno) for p in parts[1:])
        if not (0 <= u < order and 0 <= v < order) or u == v:
            raise GraphError(f"line {lineno}: endpoint out of range or loop ({u}, {v})")
        if lab < 1:
            raise GraphError(f"line {lineno}: label must be >= 1, got {lab}")
        e = _edge(u, v)
        if e in labels:
            raise GraphError(f"line {lineno}: duplicate edge {e}")
        labels[e] = lab
    if order is None:
        raise GraphError("missing header 'n <order>'")
    return LabeledGraph(Graph(order, frozenset(labels)), labels)


def _int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphError(f"line {lineno}: not an integer: {token!r}") from None


def export_dot(lg: LabeledGraph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines += [f"  {v};" for v in range(lg.order)]
    for u, v in lg.graph.sorted_edges:
        lab = lg.labels[(u, v)]
        color = DOT_PALETTE[(lab - 1) % len(DOT_PALETTE)]
        lines.append(f'  {u} -- {v} [label="{lab}", color="{color}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def read_graph_file(text: str) -> Graph | LabeledGraph:
    """Sniff the format: labeled edge list if it has an ``n`` header, else graph6."""
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.split()[0] == "n":
            return parse_labeled(text)
        return parse_graph6(line)
    # a file holding nothing but comments
    raise GraphError("no graph found in input")
