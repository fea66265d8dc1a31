"""Closed forms for Q_G on cycles, diamonds, trees and their cut-vertex joins.

Every closed form has an independent characterization as an lcm of label
products (``oracle_*``); the two are kept separate on purpose so that one can
check the other.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import reduce
from typing import Sequence

from .graph import EdgeLabeledGraph, classify_graph, family_labels
from .ring import RingElem, exact_div, gcd, gcd_many, lcm, lcm_many, normalize


class Provenance(str, Enum):
    CYCLE = "CycleFormula"
    D33 = "D33Formula"
    DMN = "DmnFormula"
    TREE = "TreeFormula"
    JOINED = "JoinedProduct"
    LATTICE = "LatticeIndexExperimental"


class UnsupportedFamily(ValueError):
    pass


@dataclass(frozen=True)
class QValue:
    value: RingElem
    provenance: Provenance

    def __post_init__(self):
        if not self.value:
            raise ValueError("Q_G is never zero")
        if normalize(self.value) != self.value:
            object.__setattr__(self, "value", normalize(self.value))


def _prod(xs):
    return reduce(lambda a, b: a * b, xs)


def _check_labels(labels, count=None):
    labels = list(labels)
    if count is not None and len(labels) != count:
        raise ValueError(f"expected {count} labels, got {len(labels)}")
    for i, l in enumerate(labels, 1):
        if not l:
            raise ValueError(f"label l_{i} is zero")
    return labels


# ---------------------------------------------------------------------------
# cycles
# ---------------------------------------------------------------------------

def q_cycle(labels: Sequence[RingElem]) -> QValue:
    """l_1 ... l_n / (l_1, ..., l_n)."""
    labels = _check_labels(labels)
    if len(labels) < 3:
        raise ValueError("a cycle has at least 3 edges")
    return QValue(exact_div(_prod(labels), gcd_many(labels)), Provenance.CYCLE)


def hat_products(labels: Sequence[RingElem]) -> tuple[RingElem, ...]:
    """l-hat_i = product of every label except l_i."""
    labels = _check_labels(labels)
    return tuple(_prod(labels[:i] + labels[i + 1:]) for i in range(len(labels)))


def oracle_q_cycle(labels: Sequence[RingElem]) -> QValue:
    return QValue(lcm_many(hat_products(labels)), Provenance.CYCLE)


# ---------------------------------------------------------------------------
# diamonds
# ---------------------------------------------------------------------------

def q_d33(labels: Sequence[RingElem]) -> QValue:
    l1, l2, l3, l4, l5 = _check_labels(labels, 5)
    den = gcd(gcd(l2, l3) * gcd(l4, l5), l1 * gcd_many([l2, l3, l4, l5]))
    return QValue(exact_div(l1 * l2 * l3 * l4 * l5, den), Provenance.D33)


D33_TRIPLES = ((1, 2, 4), (1, 2, 5), (1, 3, 4), (1, 3, 5),
               (2, 3, 4), (2, 3, 5), (2, 4, 5), (3, 4, 5))


def d33_triple_products(labels: Sequence[RingElem]) -> tuple[RingElem, ...]:
    """Products of three labels whose edges contain no triangle."""
    ls = _check_labels(labels, 5)
    return tuple(ls[a - 1] * ls[b - 1] * ls[c - 1] for a, b, c in D33_TRIPLES)


def oracle_q_d33(labels: Sequence[RingElem]) -> tuple[QValue, QValue]:
    """(lcm of the eight triple products, two-term lcm form)."""
    l1, l2, l3, l4, l5 = _check_labels(labels, 5)
    route_a = lcm_many(d33_triple_products(labels))
    outer = exact_div(l2 * l3 * l4 * l5, gcd_many([l2, l3, l4, l5]))
    route_b = lcm(l1 * lcm(l2, l3) * lcm(l4, l5), outer)
    return QValue(route_a, Provenance.D33), QValue(route_b, Provenance.D33)


def _check_mn(m, n):
    if m < 3 or n < 3:
        raise ValueError(f"D_{{{m},{n}}} needs m, n >= 3")


def q_dmn(labels: Sequence[RingElem], m: int, n: int) -> QValue:
    _check_mn(m, n)
    ls = _check_labels(labels, m + n - 1)
    right = gcd_many(ls[1:n])
    left = gcd_many(ls[n:])
    den = gcd(right * left, ls[0] * gcd_many(ls[1:]))
    return QValue(exact_div(_prod(ls), den), Provenance.DMN)


def pq_products(labels: Sequence[RingElem], m: int, n: int) -> tuple[RingElem, ...]:
    """The products p_i then q_{j,k}, in index order.

    p_i omits l_1 and l_i from the outer cycle (2 <= i <= m+n-1); q_{j,k}
    omits l_j from the right cycle and l_k from the left cycle.
    """
    _check_mn(m, n)
    ls = _check_labels(labels, m + n - 1)
    N = m + n - 1
    out = []
    for i in range(2, N + 1):
        out.append(_prod([ls[t - 1] for t in range(2, N + 1) if t != i]))
    for j in range(2, n + 1):
        for k in range(n + 1, N + 1):
            out.append(_prod([ls[t - 1] for t in range(1, N + 1) if t not in (j, k)]))
    return tuple(out)


def oracle_q_dmn(labels: Sequence[RingElem], m: int, n: int) -> QValue:
    return QValue(lcm_many(pq_products(labels, m, n)), Provenance.DMN)


# ---------------------------------------------------------------------------
# trees, joins, dispatch
# ---------------------------------------------------------------------------

def q_tree(labels: Sequence[RingElem]) -> QValue:
    labels = _check_labels(labels)
    if not labels:
        return QValue(1, Provenance.TREE)
    return QValue(_prod(labels), Provenance.TREE)


def divisor_products(g: EdgeLabeledGraph) -> tuple[RingElem, ...]:
    """Label products known to divide the determinant of any n splines on g.

    Cycles give the l-hat products, diamonds the p / q products (the eight
    triple products when m = n = 3), trees the full label product.  Joined
    graphs give products of one choice per block.
    """
    cls = classify_graph(g)
    if cls.kind == "cycle":
        return hat_products(family_labels(g, cls))
    if cls.kind == "diamond":
        m, n = cls.params
        return pq_products(family_labels(g, cls), m, n)
    if cls.kind == "tree":
        return (q_tree(g.labels).value,)
    if cls.kind == "joined":
        out = [g.domain.one()]
        for block, _ in cls.blocks:
            out = [a * b for a in out for b in divisor_products(block.graph)]
        return tuple(out)
    raise UnsupportedFamily(f"no divisor products for class {cls.kind}")


def q_graph(g: EdgeLabeledGraph, experimental_lattice: bool = True) -> QValue:
    """Q_G by family; over Z an unrecognized graph falls back to the lattice index."""
    cls = classify_graph(g)
    if cls.kind == "cycle":
        return q_cycle(family_labels(g, cls))
    if cls.kind == "diamond":
        m, n = cls.params
        labels = family_labels(g, cls)
        if (m, n) == (3, 3):
            return q_d33(labels)
        return q_dmn(labels, m, n)
    if cls.kind == "tree":
        return q_tree(g.labels)
    if cls.kind == "joined":
        value = _prod([q_graph(block.graph).value for block, _ in cls.blocks])
        return QValue(value, Provenance.JOINED)
    if g.domain.is_integer and experimental_lattice:
        from .lattice import lattice_index
        return QValue(lattice_index(g), Provenance.LATTICE)
    raise UnsupportedFamily(
        "Q_G has no closed form for this graph"
        + ("" if g.domain.is_integer else " over a polynomial domain"))



def oracle_routes(g: EdgeLabeledGraph) -> dict[str, RingElem]:
    """Independent recomputations of Q_G, keyed by route name.

    Over the integers the lattice index is always one of the routes.
    """
    cls = classify_graph(g)
    routes: dict[str, RingElem] = {}
    if cls.kind == "cycle":
        routes["oracle_lcm_hat"] = oracle_q_cycle(family_labels(g, cls)).value
    elif cls.kind == "diamond":
        m, n = cls.params
        labels = family_labels(g, cls)
        if (m, n) == (3, 3):
            a, b = oracle_q_d33(labels)
            routes["oracle_lcm_triples"] = a.value
            routes["oracle_two_term"] = b.value
        routes["oracle_lcm_pq"] = oracle_q_dmn(labels, m, n).value
    elif cls.kind == "joined":
        value = g.domain.one()
        for block, _ in cls.blocks:
            sub = oracle_routes(block.graph)
            value = value * (next(iter(sub.values())) if sub else q_graph(block.graph).value)
        routes["oracle_block_product"] = normalize(value)
    if g.domain.is_integer:
        from .lattice import lattice_index
        routes["oracle_lattice"] = lattice_index(g)
    return routes
