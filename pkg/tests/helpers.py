"""Random instance builders and hypothesis strategies shared by the tests."""

from __future__ import annotations

import random
from fractions import Fraction

from hypothesis import strategies as st

from gsplines.graph import (
    Edge,
    EdgeLabeledGraph,
    Permutation,
    cycle_graph,
    diamond_graph,
    reorder_graph,
    tree_graph,
)
from gsplines.ring import Domain, Poly, parse_elem

X = Domain.poly("x")
XY = Domain.poly("x", "y")

# Small factor pools; drawing labels as products of these makes gcds nontrivial.
FACTORS = {
    X: ["x", "x + 1", "x - 1", "x + 2", "2*x + 1"],
    XY: ["x", "y", "x + y", "x + 1", "y - 1", "x - y"],
}


def factor_label(rng: random.Random, domain: Domain, max_factors: int = 2) -> Poly:
    pool = [parse_elem(s, domain) for s in FACTORS[domain]]
    out = domain.one()
    for _ in range(rng.randint(0, max_factors)):
        out = out * rng.choice(pool)
    return out * rng.choice([1, 2, -1, Fraction(1, 3)])


def random_poly(rng: random.Random, domain: Domain, max_deg: int = 2, terms: int = 3) -> Poly:
    nv = len(domain.variables)
    t = {}
    for _ in range(rng.randint(1, terms)):
        d = rng.randint(0, max_deg)
        e = [0] * nv
        for _ in range(d):
            e[rng.randrange(nv)] += 1
        t[tuple(e)] = rng.randint(-3, 3)
    return Poly(t, domain.variables)


def random_permutation(rng: random.Random, n: int) -> Permutation:
    img = list(range(1, n + 1))
    rng.shuffle(img)
    return Permutation(tuple(img))


def shuffled(rng: random.Random, g: EdgeLabeledGraph) -> EdgeLabeledGraph:
    """Random vertex relabeling plus a random edge order."""
    h = reorder_graph(g, random_permutation(rng, g.n))
    edges = list(h.edges)
    rng.shuffle(edges)
    edges = [Edge(e.v, e.u, e.label) if rng.random() < 0.5 else e for e in edges]
    return EdgeLabeledGraph(h.n, tuple(edges), h.domain)


def random_tree(rng: random.Random, n: int, label) -> EdgeLabeledGraph:
    parents = [rng.randint(1, i + 1) for i in range(n - 1)]
    return tree_graph(parents, [label() for _ in parents])


def random_cycle(rng: random.Random, n: int, label) -> EdgeLabeledGraph:
    return cycle_graph([label() for _ in range(n)])


def random_diamond(rng: random.Random, m: int, n: int, label) -> EdgeLabeledGraph:
    return diamond_graph([label() for _ in range(m + n - 1)], m, n)


def join_at_vertex(g1: EdgeLabeledGraph, v1: int, g2: EdgeLabeledGraph, v2: int) -> EdgeLabeledGraph:
    """Glue g2's vertex v2 onto g1's vertex v1; g2's other vertices follow g1's."""
    mapping = {}
    nxt = g1.n + 1
    for w in range(1, g2.n + 1):
        if w == v2:
            mapping[w] = v1
        else:
            mapping[w] = nxt
            nxt += 1
    edges = list(g1.edges) + [Edge(mapping[e.u], mapping[e.v], e.label) for e in g2.edges]
    return EdgeLabeledGraph.build(g1.n + g2.n - 1, edges, g1.domain)


def vertex_local_splines(g: EdgeLabeledGraph) -> list[tuple]:
    """For each vertex, the product of its incident labels there and zero elsewhere."""
    zero, one = g.domain.zero(), g.domain.one()
    out = []
    for v in range(1, g.n + 1):
        prod = one
        for e in g.edges:
            if v in (e.u, e.v):
                prod = prod * e.label
        out.append(tuple(prod if w == v else zero for w in range(1, g.n + 1)))
    return out


def random_spline(rng: random.Random, g: EdgeLabeledGraph, coeff, extra=()) -> tuple:
    """A random module combination of the constant spline, vertex-local splines and extra."""
    gens = [tuple(g.domain.one() for _ in range(g.n))] + vertex_local_splines(g) + list(extra)
    out = [g.domain.zero()] * g.n
    for G in gens:
        c = coeff()
        if c:
            out = [a + c * b for a, b in zip(out, G)]
    return tuple(out)


# ---------------------------------------------------------------------------
# hypothesis strategies
# ---------------------------------------------------------------------------

def polys(domain: Domain = XY, max_deg: int = 3, max_terms: int = 4):
    nv = len(domain.variables)
    exps = st.lists(st.integers(0, max_deg), min_size=nv, max_size=nv).filter(lambda e: sum(e) <= max_deg)
    coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=4)
    return st.dictionaries(exps.map(tuple), coeffs, max_size=max_terms).map(
        lambda t: Poly(t, domain.variables))


def nonzero_polys(domain: Domain = XY, max_deg: int = 3, max_terms: int = 4):
    return polys(domain, max_deg, max_terms).filter(bool)


def factored_polys(domain: Domain = XY, max_factors: int = 3):
    pool = [parse_elem(s, domain) for s in FACTORS[domain]]
    return st.lists(st.sampled_from(pool), max_size=max_factors).map(
        lambda fs: _product(fs, domain))


def _product(fs, domain):
    out = domain.one()
    for f in fs:
        out = out * f
    return out


int_labels = st.integers(1, 60)
