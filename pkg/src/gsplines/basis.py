"""Spline matrices: determinants, the basis criterion, coordinates and explicit bases.

A candidate basis is the square matrix whose column i is the spline F_i and
whose row k is vertex k.  A set of n splines is a module basis exactly when
its determinant is a unit multiple of Q_G, so most of this module is about
computing determinants exactly and comparing them with ``q_graph``.

The ``witness_*`` builders produce the explicit matrices used to show that
Q_G is attained on cycles and diamonds.  Each is a full matrix of splines
whose determinant is Q_G times a known product of reduced labels.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Mapping, Sequence

from .graph import EdgeLabeledGraph, classify_graph, tree_parents
from .qvalue import QValue, UnsupportedFamily, divisor_products, q_graph
from .ring import Poly, RingElem, divides, exact_div, gcd_many, is_unit, lcm, lcm_many, NotDivisibleError
from .spline import is_spline


class NotInSpanError(ArithmeticError):
    """The spline is not an R-combination of the candidate columns."""

    def __init__(self, index: int, message: str):
        super().__init__(message)
        self.index = index


class SingularMatrixError(ArithmeticError):
    pass


class NonSplineColumn(ValueError):
    def __init__(self, column: int, edge: int):
        super().__init__(f"column {column} fails the edge condition on edge {edge}")
        self.column = column
        self.edge = edge


@dataclass(frozen=True)
class CandidateBasis:
    """An ordered list of n splines; column i of the matrix is splines[i]."""

    splines: tuple[tuple, ...]

    def __post_init__(self):
        object.__setattr__(self, "splines", tuple(tuple(s) for s in self.splines))
        n = len(self.splines)
        for k, s in enumerate(self.splines, 1):
            if len(s) != n:
                raise ValueError(f"column {k} has {len(s)} entries, expected {n}")

    def __len__(self):
        return len(self.splines)

    def __iter__(self):
        return iter(self.splines)

    def __getitem__(self, i):
        return self.splines[i]

    def rows(self) -> list[list[RingElem]]:
        n = len(self.splines)
        return [[self.splines[c][r] for c in range(n)] for r in range(n)]


def as_basis(cb) -> CandidateBasis:
    return cb if isinstance(cb, CandidateBasis) else CandidateBasis(tuple(cb))


# ---------------------------------------------------------------------------
# determinants
# ---------------------------------------------------------------------------

def _lift(rows):
    """Promote bare int entries to constants when the matrix has polynomials."""
    poly = next((x for row in rows for x in row if isinstance(x, Poly)), None)
    if poly is None:
        return [list(r) for r in rows]
    return [[x if isinstance(x, Poly) else Poly.constant(x, poly.vars) for x in r] for r in rows]


def det_cofactor(rows: Sequence[Sequence[RingElem]]) -> RingElem:
    """Laplace expansion along the first row; meant for n <= 4."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = None
    for c in range(n):
        a = rows[0][c]
        if not a:
            continue
        minor = [r[:c] + r[c + 1:] for r in rows[1:]]
        term = a * det_cofactor(minor)
        if c % 2:
            term = -term
        total = term if total is None else total + term
    return total if total is not None else rows[0][0] * 0


def det_bareiss(rows: Sequence[Sequence[RingElem]]) -> RingElem:
    """Fraction-free elimination; every division is exact in the domain."""
    a = [list(r) for r in rows]
    n = len(a)
    sign = 1
    prev = None
    for k in range(n - 1):
        if not a[k][k]:
            swap = next((r for r in range(k + 1, n) if a[r][k]), None)
            if swap is None:
                return a[0][0] * 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        p = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                v = a[i][j] * p - a[i][k] * a[k][j]
                a[i][j] = v if prev is None else exact_div(v, prev)
            a[i][k] = a[i][k] * 0
        prev = p
    d = a[n - 1][n - 1]
    return d if sign > 0 else -d


def determinant(cb) -> RingElem:
    """|F_1 ... F_n| with vertex k as row k."""
    cb = as_basis(cb)
    if not len(cb):
        raise ValueError("empty matrix")
    rows = _lift(cb.rows())
    if len(rows) <= 4:
        return det_cofactor(rows)
    return det_bareiss(rows)


def _replace_column(cb, i, F):
    cols = list(cb.splines)
    cols[i] = tuple(F)
    return CandidateBasis(tuple(cols))


def coordinates(cb, F: Sequence[RingElem]) -> list[RingElem]:
    """(a_1, ..., a_n) with F = sum a_i F_i, by Cramer's rule and exact division."""
    cb = as_basis(cb)
    if len(F) != len(cb):
        raise ValueError(f"spline has {len(F)} entries, matrix has {len(cb)} rows")
    d = determinant(cb)
    if not d:
        raise SingularMatrixError("candidate matrix has zero determinant")
    out = []
    for i in range(len(cb)):
        di = determinant(_replace_column(cb, i, F))
        try:
            out.append(exact_div(di, d))
        except NotDivisibleError:
            raise NotInSpanError(i + 1, f"coordinate {i + 1} is {di} / {d}, not in the ring") from None
    return out


# ---------------------------------------------------------------------------
# divisibility and the basis criterion
# ---------------------------------------------------------------------------

def _require_splines(g, cb):
    if len(cb) != g.n:
        raise ValueError(f"{len(cb)} splines for a graph on {g.n} vertices")
    for k, s in enumerate(cb, 1):
        report = is_spline(g, s)
        if not report:
            raise NonSplineColumn(k, report.failures[0][0])


@dataclass
class DivisibilityReport:
    det: RingElem
    q: RingElem
    violations: list[tuple[str, RingElem]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok


def divisibility_check(g: EdgeLabeledGraph, splines) -> DivisibilityReport:
    """Check that Q_G and every known divisor product divide the determinant."""
    cb = as_basis(splines)
    _require_splines(g, cb)
    det = determinant(cb)
    q = q_graph(g).value
    report = DivisibilityReport(det, q)
    if not divides(q, det):
        report.violations.append(("Q", q))
    try:
        products = divisor_products(g)
    except UnsupportedFamily:
        products = ()
    for p in products:
        if not divides(p, det):
            report.violations.append(("product", p))
    return report


@dataclass(frozen=True)
class BasisVerdict:
    is_basis: bool
    det: RingElem
    q: QValue
    ratio: RingElem | None
    """det / Q, or None when Q does not divide det."""
    experimental: bool = False

    def __bool__(self):
        return self.is_basis


def check_basis(g: EdgeLabeledGraph, cb) -> BasisVerdict:
    cb = as_basis(cb)
    _require_splines(g, cb)
    q = q_graph(g)
    det = determinant(cb)
    try:
        ratio = exact_div(det, q.value)
    except NotDivisibleError:
        ratio = None
    experimental = g.domain.is_integer and classify_graph(g).kind == "other"
    return BasisVerdict(ratio is not None and is_unit(ratio), det, q, ratio, experimental)


# ---------------------------------------------------------------------------
# trees
# ---------------------------------------------------------------------------

def _bfs_parents(g):
    adj = g.adjacency()
    parent = {1: None}
    order = [1]
    for v in order:
        for w in adj[v]:
            if w not in parent:
                parent[w] = v
                order.append(w)
    return parent


def tree_flow_up_basis(g: EdgeLabeledGraph) -> CandidateBasis:
    """Column v is the label of v's parent edge on the subtree below v (root v_1).

    Any vertex numbering is accepted; the result is lower-triangular, i.e. a
    flow-up basis, when every vertex's parent has a smaller index.
    """
    if len(g.edges) != g.n - 1:
        raise ValueError("not a tree")
    parent = _bfs_parents(g)
    one, zero = g.domain.one(), g.domain.zero()
    cols = [(one,) * g.n]
    for v in range(2, g.n + 1):
        label = g.label_of(parent[v], v)
        below = set()
        for w in range(1, g.n + 1):
            u = w
            while u is not None and u != v:
                u = parent[u]
            if u == v:
                below.add(w)
        cols.append(tuple(label if w in below else zero for w in range(1, g.n + 1)))
    return CandidateBasis(tuple(cols))


def is_parent_ordered(g: EdgeLabeledGraph) -> bool:
    return tree_parents(g) is not None


# ---------------------------------------------------------------------------
# witness matrices for cycles
# ---------------------------------------------------------------------------

def _indicator(n, rows, value, zero):
    rows = set(rows)
    return tuple(value if k in rows else zero for k in range(1, n + 1))


def witness_cycle(labels: Sequence[RingElem], i: int) -> CandidateBasis:
    """The matrix A^(i) on C_n with labels l_k = {v_k, v_(k+1)}.

    Its determinant is Q_{C_n} * (l_i / a)^(n-1) up to sign, a = gcd of all labels.
    """
    ls = list(labels)
    n = len(ls)
    if n < 3:
        raise ValueError("a cycle has at least 3 edges")
    if not 1 <= i <= n:
        raise IndexError(f"witness index {i} outside 1..{n}")
    l = lambda k: ls[k - 1]  # noqa: E731
    a = gcd_many(ls)
    li_red = exact_div(l(i), a)
    zero, one = ls[0] * 0, ls[0] * 0 + 1
    cols = [(one,) * n]
    for j in range(1, n):
        if j < i:
            inner = gcd_many([l(k) for k in range(1, j)] + [l(i), l(n)])
            cols.append(_indicator(n, range(j + 1, i + 1), lcm(l(j), inner) * li_red, zero))
        elif j == i:
            cols.append(_indicator(n, range(1, i + 1), lcm(l(i), l(n)) * li_red, zero))
        else:
            inner = gcd_many([l(k) for k in range(1, j)] + [l(n)])
            cols.append(_indicator(n, range(i + 1, j + 1), lcm(l(j), inner) * li_red, zero))
    return CandidateBasis(tuple(cols))


# ---------------------------------------------------------------------------
# witness matrices for D_{3,3}
# ---------------------------------------------------------------------------

def witness_d33(labels: Sequence[RingElem]) -> list[CandidateBasis]:
    """A_1..A_4 on D_{3,3}; det(A_k) is Q times l'3l'5, l'4l'2, l'3l'4, l'2l'5.

    Here l'_2 = l_2/d1, l'_3 = l_3/d1 with d1 = (l_2, l_3), and similarly
    l'_4, l'_5 with d2 = (l_4, l_5).
    """
    l1, l2, l3, l4, l5 = labels
    d1, d2 = gcd_many([l2, l3]), gcd_many([l4, l5])
    red = {2: exact_div(l2, d1), 3: exact_div(l3, d1),
           4: exact_div(l4, d2), 5: exact_div(l5, d2)}
    base = lcm_many([l1, d1, d2])
    zero, one = l1 * 0, l1 * 0 + 1
    l23, l45 = lcm(l2, l3), lcm(l4, l5)
    shared = [(one,) * 4, (zero, zero, l23, zero), (zero, zero, zero, l45)]
    out = []
    for (p, q), support in (((3, 5), (1,)), ((4, 2), (1, 3, 4)),
                            ((3, 4), (1, 4)), ((2, 5), (1, 3))):
        c = base * red[p] * red[q]
        col = _indicator(4, support, c, zero)
        out.append(CandidateBasis((shared[0], col, shared[1], shared[2])))
    return out


D33_WITNESS_PRODUCTS = ((3, 5), (4, 2), (3, 4), (2, 5))


# ---------------------------------------------------------------------------
# witness matrices for D_{m,n}
# ---------------------------------------------------------------------------

def _dmn_d(ls, m, n, i):
    """d_i: gcd of the labels after l_i on its own side of the diamond."""
    end = n if i <= n - 2 else m + n - 1
    return gcd_many(ls[i:end])


def dmn_choice_space(m: int, n: int) -> dict[int, list]:
    """Options per multi-element column set: 1 -> (i, j) pairs, t -> j values."""
    if m < 3 or n < 3:
        raise ValueError("D_{m,n} needs m, n >= 3")
    N = m + n - 1
    space = {1: [(i, j) for i in range(2, n + 1) for j in range(n + 1, N + 1)]}
    for t in range(2, n - 1):
        space[t] = list(range(t + 1, n + 1))
    for t in range(n + 1, m + n - 2):
        space[t] = list(range(t + 1, N + 1))
    return space


def iter_dmn_choices(m: int, n: int) -> Iterable[dict]:
    space = dmn_choice_space(m, n)
    keys = sorted(space)
    for combo in product(*(space[k] for k in keys)):
        yield dict(zip(keys, combo))


def _check_choices(m, n, choices):
    space = dmn_choice_space(m, n)
    if set(choices) != set(space):
        raise ValueError(f"choices must cover the sets {sorted(space)}")
    for t, c in choices.items():
        c = tuple(c) if t == 1 else c
        if c not in space[t]:
            raise ValueError(f"choice {c!r} is not available for set {t}")


def dmn_b_product(labels: Sequence[RingElem], m: int, n: int, choices: Mapping) -> RingElem:
    """The reduced-label product b that the chosen witness contributes beyond Q."""
    ls = list(labels)
    _check_choices(m, n, choices)
    i, j = choices[1]
    b = exact_div(ls[i - 1], _dmn_d(ls, m, n, 1)) * exact_div(ls[j - 1], _dmn_d(ls, m, n, n))
    for t, jt in choices.items():
        if t != 1:
            b = b * exact_div(ls[jt - 1], _dmn_d(ls, m, n, t))
    return b


def witness_dmn(labels: Sequence[RingElem], m: int, n: int, choices: Mapping) -> CandidateBasis:
    """Lower-triangular witness on D_{m,n}; det = b * Q with b from ``dmn_b_product``."""
    ls = list(labels)
    if len(ls) != m + n - 1:
        raise ValueError(f"D_{{{m},{n}}} has {m + n - 1} edges, got {len(ls)} labels")
    _check_choices(m, n, choices)
    l = lambda k: ls[k - 1]  # noqa: E731
    d = lambda k: _dmn_d(ls, m, n, k)  # noqa: E731
    V = m + n - 2
    zero, one = ls[0] * 0, ls[0] * 0 + 1
    cols = [(one,) * V]
    i, j = choices[1]
    c = lcm_many([l(1), d(1), d(n)]) * exact_div(l(i), d(1)) * exact_div(l(j), d(n))
    cols.append(_indicator(V, list(range(2, i + 1)) + list(range(n + 1, j)), c, zero))
    for t in range(2, n - 1):
        jt = choices[t]
        c = lcm(l(t), d(t)) * exact_div(l(jt), d(t))
        cols.append(_indicator(V, range(t + 1, jt + 1), c, zero))
    cols.append(_indicator(V, (n,), lcm(l(n - 1), l(n)), zero))
    for t in range(n + 1, m + n - 2):
        jt = choices[t]
        c = lcm(l(t), d(t)) * exact_div(l(jt), d(t))
        cols.append(_indicator(V, range(t, jt), c, zero))
    cols.append(_indicator(V, (m + n - 2,), lcm(l(m + n - 2), l(m + n - 1)), zero))
    return CandidateBasis(tuple(cols))
