"""Edge-labeled graphs, vertex reordering and family recognition.

Vertices are numbered 1..n.  Edge order matters: the i-th edge carries the
label l_i.  The family conventions used to index labels are:

cycle C_n
    l_i = {v_i, v_{i+1}} for i < n, l_n = {v_n, v_1}.
diamond D_{m,n}
    l_1 = {v_1, v_2} is the shared edge; the right cycle C_n runs
    v_2, v_3, ..., v_n, v_1 with labels l_2..l_n; the left cycle C_m runs
    v_2, v_{n+1}, ..., v_{m+n-2}, v_1 with labels l_{n+1}..l_{m+n-1}.
tree
    every v_i with i >= 2 has exactly one neighbor of smaller index.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import networkx as nx

from .ring import Domain, RingElem, domain_of


class ValidationError(ValueError):
    pass


class Disconnected(ValidationError):
    pass


class SelfLoop(ValidationError):
    pass


class DuplicateEdge(ValidationError):
    pass


class ZeroLabel(ValidationError):
    pass


class BadVertexIndex(ValidationError):
    pass


@dataclass(frozen=True)
class Edge:
    u: int
    v: int
    label: RingElem

    @property
    def key(self) -> frozenset:
        return frozenset((self.u, self.v))


@dataclass(frozen=True)
class EdgeLabeledGraph:
    n: int
    edges: tuple[Edge, ...]
    domain: Domain

    @classmethod
    def build(cls, n: int, edges: Iterable, domain: Domain | None = None,
              validate: bool = True) -> EdgeLabeledGraph:
        """Make a graph from (u, v, label) triples."""
        es = tuple(e if isinstance(e, Edge) else Edge(int(e[0]), int(e[1]), e[2])
                   for e in edges)
        if domain is None:
            if not es:
                raise ValueError("cannot infer the domain of a graph without edges")
            domain = domain_of(es[0].label)
        g = cls(n, es, domain)
        if validate:
            validate_graph(g)
        return g

    @property
    def labels(self) -> tuple[RingElem, ...]:
        return tuple(e.label for e in self.edges)

    def label_of(self, u: int, v: int) -> RingElem:
        key = frozenset((u, v))
        for e in self.edges:
            if e.key == key:
                return e.label
        raise KeyError(f"no edge {{{u}, {v}}}")

    def edge_set(self) -> set[frozenset]:
        return {e.key for e in self.edges}

    def adjacency(self) -> dict[int, list[int]]:
        adj = {v: [] for v in range(1, self.n + 1)}
        for e in self.edges:
            adj[e.u].append(e.v)
            adj[e.v].append(e.u)
        for v in adj:
            adj[v].sort()
        return adj

    def to_networkx(self) -> nx.Graph:
        G = nx.Graph()
        G.add_nodes_from(range(1, self.n + 1))
        for i, e in enumerate(self.edges):
            G.add_edge(e.u, e.v, index=i)
        return G


def validate_graph(g: EdgeLabeledGraph) -> None:
    """Raise a ValidationError subclass naming the offending edge or vertex."""
    if g.n < 1:
        raise BadVertexIndex(f"vertex count must be positive, got {g.n}")
    seen = {}
    for i, e in enumerate(g.edges, 1):
        for w in (e.u, e.v):
            if not 1 <= w <= g.n:
                raise BadVertexIndex(f"edge {i}: vertex {w} outside 1..{g.n}")
        if e.u == e.v:
            raise SelfLoop(f"edge {i}: self loop at vertex {e.u}")
        if e.key in seen:
            raise DuplicateEdge(f"edge {i}: {{{e.u}, {e.v}}} repeats edge {seen[e.key]}")
        seen[e.key] = i
        if not g.domain.contains(e.label):
            raise ValidationError(f"edge {i}: label {e.label!r} is not in {g.domain}")
        if not e.label:
            raise ZeroLabel(f"edge {i}: zero label on {{{e.u}, {e.v}}}")
    if not nx.is_connected(g.to_networkx()):
        comp = min(nx.connected_components(g.to_networkx()), key=min)
        stray = min(set(range(1, g.n + 1)) - comp)
        raise Disconnected(f"vertex {stray} is not reachable from vertex 1")


# ---------------------------------------------------------------------------
# permutations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Permutation:
    """image[i-1] = sigma(i), on {1..n}."""

    image: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "image", tuple(int(i) for i in self.image))
        if sorted(self.image) != list(range(1, len(self.image) + 1)):
            raise ValueError(f"{self.image} is not a permutation of 1..{len(self.image)}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> Permutation:
        img = list(range(1, n + 1))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                img[a - 1] = b
        return cls(tuple(img))

    def __len__(self):
        return len(self.image)

    def __call__(self, i: int) -> int:
        return self.image[i - 1]

    def inverse(self) -> Permutation:
        inv = [0] * len(self.image)
        for i, s in enumerate(self.image, 1):
            inv[s - 1] = i
        return Permutation(tuple(inv))

    def then(self, other: Permutation) -> Permutation:
        """The relabeling equal to reordering by self and then by other."""
        return Permutation(tuple(self(other(i)) for i in range(1, len(self) + 1)))

    def is_identity(self) -> bool:
        return self.image == tuple(range(1, len(self.image) + 1))


def reorder_graph(g: EdgeLabeledGraph, sigma: Permutation) -> EdgeLabeledGraph:
    """Vertex i of the result is vertex sigma(i) of g; edge order is kept."""
    if len(sigma) != g.n:
        raise ValueError(f"permutation of length {len(sigma)} for {g.n} vertices")
    inv = sigma.inverse()
    edges = tuple(Edge(inv(e.u), inv(e.v), e.label) for e in g.edges)
    return EdgeLabeledGraph(g.n, edges, g.domain)


# ---------------------------------------------------------------------------
# family layouts and builders
# ---------------------------------------------------------------------------

def cycle_pairs(n: int) -> list[tuple[int, int]]:
    return [(i, i + 1) for i in range(1, n)] + [(n, 1)]


def diamond_pairs(m: int, n: int) -> list[tuple[int, int]]:
    """Vertex pairs of l_1..l_{m+n-1} on D_{m,n}."""
    if m < 3 or n < 3:
        raise ValueError("diamond D_{m,n} needs m, n >= 3")
    right = [(1, 2)] + [(i, i + 1) for i in range(2, n)] + [(n, 1)]
    left_path = [2] + list(range(n + 1, m + n - 1)) + [1]
    left = list(zip(left_path, left_path[1:]))
    return right + left


def cycle_graph(labels: Sequence[RingElem]) -> EdgeLabeledGraph:
    n = len(labels)
    if n < 3:
        raise ValueError("a cycle needs at least 3 edges")
    return EdgeLabeledGraph.build(n, [(u, v, l) for (u, v), l in zip(cycle_pairs(n), labels)])


def diamond_graph(labels: Sequence[RingElem], m: int, n: int) -> EdgeLabeledGraph:
    pairs = diamond_pairs(m, n)
    if len(labels) != len(pairs):
        raise ValueError(f"D_{{{m},{n}}} has {len(pairs)} edges, got {len(labels)} labels")
    return EdgeLabeledGraph.build(m + n - 2, [(u, v, l) for (u, v), l in zip(pairs, labels)])


def tree_graph(parents: Sequence[int], labels: Sequence[RingElem],
               domain: Domain | None = None) -> EdgeLabeledGraph:
    """Tree with parent(v_{i+2}) = parents[i]; labels[i] on that edge."""
    if len(parents) != len(labels):
        raise ValueError("one label per parent edge")
    for i, p in enumerate(parents):
        if not 1 <= p <= i + 1:
            raise ValueError(f"vertex {i + 2} needs a parent below it, got {p}")
    edges = [(p, i + 2, l) for i, (p, l) in enumerate(zip(parents, labels))]
    return EdgeLabeledGraph.build(len(parents) + 1, edges, domain)


def path_graph(labels: Sequence[RingElem]) -> EdgeLabeledGraph:
    return tree_graph(list(range(1, len(labels) + 1)), labels)


def tree_parents(g: EdgeLabeledGraph) -> list[int] | None:
    """parents[i-2] = the unique smaller neighbor of v_i, or None if absent."""
    adj = g.adjacency()
    out = []
    for v in range(2, g.n + 1):
        smaller = [w for w in adj[v] if w < v]
        if len(smaller) != 1:
            return None
        out.append(smaller[0])
    return out


def _is_cycle_layout(g):
    return g.n >= 3 and len(g.edges) == g.n and g.edge_set() == {frozenset(p) for p in cycle_pairs(g.n)}


def _diamond_layout(g):
    """(m, n) if g already follows the D_{m,n} convention, else None."""
    N = g.n
    es = g.edge_set()
    for n in range(3, N):
        m = N + 2 - n
        if m >= 3 and es == {frozenset(p) for p in diamond_pairs(m, n)}:
            return m, n
    return None


# ---------------------------------------------------------------------------
# blocks and classification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Block:
    """A biconnected component (or bridge) with its own 1..k numbering."""

    vertices: tuple[int, ...]
    edge_indices: tuple[int, ...]
    graph: EdgeLabeledGraph


def induced_subgraph(g: EdgeLabeledGraph, vertices: Iterable[int],
                     edge_indices: Iterable[int] | None = None) -> Block:
    vs = tuple(sorted(set(vertices)))
    local = {v: i for i, v in enumerate(vs, 1)}
    if edge_indices is None:
        edge_indices = [i for i, e in enumerate(g.edges) if e.u in local and e.v in local]
    idx = tuple(sorted(edge_indices))
    edges = tuple(Edge(local[g.edges[i].u], local[g.edges[i].v], g.edges[i].label) for i in idx)
    return Block(vs, idx, EdgeLabeledGraph(len(vs), edges, g.domain))


def block_decompose(g: EdgeLabeledGraph) -> list[Block]:
    """Blocks (biconnected components, bridges included) ordered by vertex set."""
    G = g.to_networkx()
    blocks = []
    for comp in nx.biconnected_component_edges(G):
        idx = [G.edges[u, v]["index"] for u, v in comp]
        verts = {w for uv in comp for w in uv}
        blocks.append(induced_subgraph(g, verts, idx))
    blocks.sort(key=lambda b: (b.vertices, b.edge_indices))
    return blocks


def cut_vertices(g: EdgeLabeledGraph) -> set[int]:
    return set(nx.articulation_points(g.to_networkx()))


@dataclass(frozen=True)
class GraphClass:
    """Recognized family plus the relabeling that puts g in that family's layout.

    ``kind`` is one of "cycle", "tree", "diamond", "joined", "other".
    ``params`` holds (n,) for cycles and (m, n) for diamonds.  For joined
    graphs ``blocks`` pairs each block with its own GraphClass.
    """

    kind: str
    relabel: Permutation
    params: tuple[int, ...] = ()
    blocks: tuple[tuple[Block, GraphClass], ...] = field(default=(), repr=False)

    def describe(self) -> str:
        if self.kind == "cycle":
            return f"cycle({self.params[0]})"
        if self.kind == "diamond":
            return f"diamond({self.params[0]},{self.params[1]})"
        if self.kind == "joined":
            return "joined[" + ", ".join(c.describe() for _, c in self.blocks) + "]"
        return self.kind


def _cycle_relabel(g):
    if _is_cycle_layout(g):
        return Permutation.identity(g.n)
    adj = g.adjacency()
    order = [1, adj[1][0]]
    while len(order) < g.n:
        nxt = [w for w in adj[order[-1]] if w != order[-2]]
        order.append(nxt[0])
    return Permutation(tuple(order))


def _tree_relabel(g):
    if tree_parents(g) is not None:
        return Permutation.identity(g.n)
    adj = g.adjacency()
    order, seen, queue = [], {1}, deque([1])
    while queue:
        v = queue.popleft()
        order.append(v)
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return Permutation(tuple(order))


def _diamond_relabel(g):
    """(relabel, m, n) if g is two cycles sharing exactly one edge, else None."""
    N, E = g.n, len(g.edges)
    if N < 4 or E != N + 1:
        return None
    layout = _diamond_layout(g)
    if layout is not None:
        return Permutation.identity(N), layout[0], layout[1]
    adj = g.adjacency()
    hubs = [v for v in adj if len(adj[v]) == 3]
    if len(hubs) != 2 or any(len(adj[v]) != 2 for v in adj if v not in hubs):
        return None
    a, b = hubs
    if b not in adj[a]:
        return None
    paths = []
    for start in adj[b]:
        if start == a:
            continue
        path, prev = [start], b
        while path[-1] != a:
            nxt = [w for w in adj[path[-1]] if w != prev]
            prev = path[-1]
            path.append(nxt[0])
        paths.append(path[:-1])
    right, left = sorted(paths, key=lambda p: (len(p), p))
    n = len(right) + 2
    m = len(left) + 2
    order = [a, b] + right + left
    return Permutation(tuple(order)), m, n


def _joined_relabel(g, blocks):
    """Blocks laid out one after another, each attached at its least new index."""
    new_index = {1: 1}
    order = [1]
    pending = list(blocks)
    while pending:
        best = None
        for b in pending:
            known = [new_index[v] for v in b.vertices if v in new_index]
            if not known:
                continue
            rest = [v for v in b.vertices if v not in new_index]
            key = (min(known), min(rest) if rest else 0)
            if best is None or key < best[0]:
                best = (key, b)
        _, b = best
        pending.remove(b)
        for v in b.vertices:
            if v not in new_index:
                order.append(v)
                new_index[v] = len(order)
    return Permutation(tuple(order))


def classify_graph(g: EdgeLabeledGraph) -> GraphClass:
    N, E = g.n, len(g.edges)
    if E == N - 1:
        return GraphClass("tree", _tree_relabel(g))
    if E == N and all(len(nb) == 2 for nb in g.adjacency().values()):
        return GraphClass("cycle", _cycle_relabel(g), (N,))
    d = _diamond_relabel(g)
    if d is not None:
        sigma, m, n = d
        return GraphClass("diamond", sigma, (m, n))
    blocks = block_decompose(g)
    if len(blocks) > 1:
        parts = []
        for b in blocks:
            c = classify_graph(b.graph)
            if c.kind not in ("cycle", "tree", "diamond"):
                return GraphClass("other", Permutation.identity(N))
            parts.append((b, c))
        return GraphClass("joined", _joined_relabel(g, blocks), blocks=tuple(parts))
    return GraphClass("other", Permutation.identity(N))


def family_labels(g: EdgeLabeledGraph, cls: GraphClass | None = None) -> list[RingElem]:
    """Labels l_1, l_2, ... read off in the family layout (cycle/diamond/tree)."""
    cls = cls or classify_graph(g)
    h = reorder_graph(g, cls.relabel)
    if cls.kind == "cycle":
        return [h.label_of(u, v) for u, v in cycle_pairs(h.n)]
    if cls.kind == "diamond":
        return [h.label_of(u, v) for u, v in diamond_pairs(*cls.params)]
    if cls.kind == "tree":
        parents = tree_parents(h)
        return [h.label_of(p, i + 2) for i, p in enumerate(parents)]
    raise ValueError(f"no label layout for a {cls.kind} graph")
