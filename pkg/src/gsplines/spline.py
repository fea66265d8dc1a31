"""Splines as plain vertex-indexed tuples, and what can be asked of them.

A spline is just a tuple ``(f_1, ..., f_n)``; index 0 of the tuple is vertex 1.
Membership in the spline module of a graph is a checked property.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .graph import EdgeLabeledGraph, Permutation
from .ring import RingElem, ZeroElement, divides, domain_of, total_degree

Spline = tuple


@dataclass(frozen=True)
class SplineReport:
    ok: bool
    failures: list[tuple[int, RingElem]] = field(default_factory=list)
    """(1-based edge index, offending difference f_u - f_v)."""

    def __bool__(self):
        return self.ok


def _check_length(g, F):
    if len(F) != g.n:
        raise ValueError(f"spline has {len(F)} entries, graph has {g.n} vertices")


def is_spline(g: EdgeLabeledGraph, F: Sequence[RingElem]) -> SplineReport:
    _check_length(g, F)
    failures = []
    for i, e in enumerate(g.edges, 1):
        diff = F[e.u - 1] - F[e.v - 1]
        if not divides(e.label, diff):
            failures.append((i, diff))
    return SplineReport(not failures, failures)


def is_flow_up(F: Sequence[RingElem], i: int) -> bool:
    """Entry i nonzero and entries 1..i-1 zero (shape only)."""
    if not 1 <= i <= len(F):
        raise IndexError(f"flow-up index {i} outside 1..{len(F)}")
    return bool(F[i - 1]) and not any(F[:i - 1])


def constant_spline(g: EdgeLabeledGraph, c: RingElem | None = None) -> Spline:
    c = g.domain.one() if c is None else c
    return (c,) * g.n


def trivial_flow_up(g: EdgeLabeledGraph, i: int) -> Spline:
    """Product of all edge labels at vertex i, zero elsewhere."""
    if not 2 <= i <= g.n:
        raise IndexError(f"trivial flow-up index {i} outside 2..{g.n}; use constant_spline for 1")
    prod = g.domain.one()
    for l in g.labels:
        prod = prod * l
    zero = g.domain.zero()
    return tuple(prod if k == i else zero for k in range(1, g.n + 1))


def permute_spline(F: Sequence[RingElem], sigma: Permutation) -> Spline:
    """Entry i of the result is f_{sigma(i)}."""
    if len(F) != len(sigma):
        raise ValueError(f"spline of length {len(F)} and permutation of length {len(sigma)}")
    return tuple(F[sigma(i) - 1] for i in range(1, len(F) + 1))


def spline_combine(coeffs: Sequence[RingElem], splines: Sequence[Sequence[RingElem]]) -> Spline:
    if len(coeffs) != len(splines):
        raise ValueError(f"{len(coeffs)} coefficients for {len(splines)} splines")
    if not splines:
        raise ValueError("nothing to combine")
    n = len(splines[0])
    if any(len(S) != n for S in splines):
        raise ValueError("splines of different lengths")
    out = [c * 0 for c in splines[0]]
    for a, S in zip(coeffs, splines):
        if a:
            for k in range(n):
                out[k] = out[k] + a * S[k]
    return tuple(out)


def spline_degree(F: Sequence[RingElem]):
    """max total degree over nonzero entries; ZeroElement for the zero spline."""
    if F and domain_of(F[0]).is_integer:
        raise TypeError("spline degree is defined over polynomial domains only")
    degs = [total_degree(f) for f in F if f]
    return max(degs) if degs else ZeroElement
