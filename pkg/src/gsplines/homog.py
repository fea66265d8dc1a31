"""Homogenization of polynomials, splines and graphs, plus degree-based checks.

With a fresh variable z, a polynomial f of total degree D becomes
z^D f(x/z), a homogeneous polynomial of degree D.  A spline F is padded
entrywise so that every nonzero entry lands in the top degree of F.  Zero
stays zero; there is no meaningful padding for it.

The checks at the end can refute that a basis is reduced but never prove it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .basis import as_basis, coordinates, determinant
from .graph import Edge, EdgeLabeledGraph, classify_graph, family_labels
from .qvalue import UnsupportedFamily
from .ring import Domain, Poly, RingElem, ZeroElement, gcd, gcd_many, total_degree
from .spline import spline_degree


class VariableClash(ValueError):
    pass


class NotHomogeneous(ValueError):
    pass


def _require_poly(f):
    if not isinstance(f, Poly):
        raise TypeError("homogenization needs a polynomial domain")


def extend_vars(vars: Sequence[str], var: str = "z") -> tuple[str, ...]:
    if var in vars:
        raise VariableClash(f"variable {var!r} already in use")
    return tuple(vars) + (var,)


def homogenize_poly(f: RingElem, var: str = "z") -> Poly:
    """z^deg(f) * f(x_1/z, ..., x_d/z); the zero polynomial maps to zero."""
    _require_poly(f)
    vars = extend_vars(f.vars, var)
    if not f:
        return Poly({}, vars)
    D = total_degree(f)
    return Poly({e + (D - sum(e),): c for e, c in f.items()}, vars)


def _z_power(vars, k):
    return Poly({(0,) * (len(vars) - 1) + (k,): 1}, vars)


def homogenize_spline(F: Sequence[RingElem], var: str = "z") -> tuple[Poly, ...]:
    """Entry i becomes z^(deg F - deg f_i) * hom(f_i); zero entries stay zero."""
    for f in F:
        _require_poly(f)
    vars = extend_vars(F[0].vars, var) if F else (var,)
    top = spline_degree(F) if F else ZeroElement
    out = []
    for f in F:
        if not f:
            out.append(Poly({}, vars))
        else:
            out.append(_z_power(vars, top - total_degree(f)) * homogenize_poly(f, var))
    return tuple(out)


def dehomogenize_poly(f: Poly, var: str = "z") -> Poly:
    """Set var = 1 and drop it from the variable list."""
    _require_poly(f)
    if var not in f.vars:
        return f
    k = f.vars.index(var)
    vars = f.vars[:k] + f.vars[k + 1:]
    terms: dict = {}
    for e, c in f.items():
        e2 = e[:k] + e[k + 1:]
        terms[e2] = terms.get(e2, 0) + c
    return Poly(terms, vars)


def dehomogenize(F: Sequence[RingElem], var: str = "z") -> tuple[Poly, ...]:
    return tuple(dehomogenize_poly(f, var) for f in F)


@dataclass(frozen=True)
class HomogenizedGraph:
    base: EdgeLabeledGraph
    hat: EdgeLabeledGraph


def homogenize_graph(g: EdgeLabeledGraph, var: str = "z") -> HomogenizedGraph:
    if g.domain.is_integer:
        raise TypeError("homogenization needs a polynomial domain")
    domain = Domain.poly(*extend_vars(g.domain.variables, var))
    edges = [Edge(e.u, e.v, homogenize_poly(e.label, var)) for e in g.edges]
    return HomogenizedGraph(g, EdgeLabeledGraph(g.n, tuple(edges), domain))


def homogeneous_components(F: Sequence[RingElem]) -> dict[int, tuple[Poly, ...]]:
    """Split F by total degree; the components sum to F and the zero spline gives {}."""
    for f in F:
        _require_poly(f)
    parts: dict[int, list[dict]] = {}
    for k, f in enumerate(F):
        for e, c in f.items():
            parts.setdefault(sum(e), [{} for _ in F])[k][e] = c
    return {d: tuple(Poly(t, F[0].vars) for t in parts[d]) for d in sorted(parts)}


def homogeneous_degree(F: Sequence[RingElem]):
    """Common degree of a homogeneous spline, ZeroElement if F is zero."""
    degs = set()
    for f in F:
        _require_poly(f)
        if f:
            if not f.is_homogeneous():
                raise NotHomogeneous(f"{f} is not homogeneous")
            degs.add(total_degree(f))
    if len(degs) > 1:
        raise NotHomogeneous(f"entries of mixed degrees {sorted(degs)}")
    return degs.pop() if degs else ZeroElement


# ---------------------------------------------------------------------------
# degree checks
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DetDegreeResult:
    passed: bool
    det: RingElem
    det_degree: object
    degree_sum: int | None


def det_degree_check(splines) -> DetDegreeResult:
    """The determinant of homogeneous splines is 0 or has degree = sum of their degrees."""
    cb = as_basis(splines)
    degs = [homogeneous_degree(F) for F in cb]
    det = determinant(cb)
    if not det:
        return DetDegreeResult(True, det, ZeroElement, None)
    if ZeroElement in degs:
        return DetDegreeResult(False, det, total_degree(det), None)
    expected = sum(degs)
    dd = total_degree(det)
    return DetDegreeResult(dd == expected and det.is_homogeneous(), det, dd, expected)


@dataclass(frozen=True)
class WitnessResult:
    passed: bool
    index: int | None
    """First i (1-based) with deg(r_i G_i) > deg F."""
    coords: tuple

    def __bool__(self):
        return self.passed


def reduced_witness_check(g: EdgeLabeledGraph, cb, F: Sequence[RingElem]) -> WitnessResult:
    cb = as_basis(cb)
    if len(F) != g.n:
        raise ValueError(f"spline has {len(F)} entries, graph has {g.n} vertices")
    coords = tuple(coordinates(cb, F))
    dF = spline_degree(F)
    for i, (r, G) in enumerate(zip(coords, cb), 1):
        if not r:
            continue
        d = total_degree(r) + spline_degree(G)
        if dF is ZeroElement or d > dF:
            return WitnessResult(False, i, coords)
    return WitnessResult(True, None, coords)


def _deg(a):
    return total_degree(a)


def degree_sum_rhs(g: EdgeLabeledGraph) -> int:
    """Sum of label degrees, less the degree of the family's gcd correction."""
    if g.domain.is_integer:
        raise TypeError("degree sums need a polynomial domain")
    cls = classify_graph(g)
    if cls.kind not in ("cycle", "diamond", "tree"):
        raise UnsupportedFamily(f"no degree-sum formula for class {cls.kind}")
    if cls.kind == "tree":
        return sum(_deg(l) for l in g.labels)
    ls = family_labels(g, cls)
    total = sum(_deg(l) for l in ls)
    if cls.kind == "cycle":
        return total - _deg(gcd_many(ls))
    m, n = cls.params
    den = gcd(gcd_many(ls[1:n]) * gcd_many(ls[n:]), ls[0] * gcd_many(ls[1:]))
    return total - _deg(den)


@dataclass(frozen=True)
class DegreeSumResult:
    passed: bool
    lhs: int
    rhs: int
    """A failure proves the basis is not reduced; a pass proves nothing."""

    def __bool__(self):
        return self.passed


def degree_sum_check(g: EdgeLabeledGraph, cb) -> DegreeSumResult:
    cb = as_basis(cb)
    rhs = degree_sum_rhs(g)
    lhs = sum(spline_degree(F) for F in cb)
    return DegreeSumResult(lhs == rhs, lhs, rhs)
