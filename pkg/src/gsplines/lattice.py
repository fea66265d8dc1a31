"""Integer splines as a lattice: kernel generators and the Hermite normal form.

Over Z the spline module of any graph is the full-rank lattice

    L = {f in Z^n : l_e divides f_u - f_v for every edge e = (u, v)}.

It is the projection to the first n coordinates of the kernel of
[B | D], where B is the signed incidence matrix and D = diag(l_e).  That
projection is injective, so the n kernel basis vectors project to a basis of
L, which is then brought to lower-triangular Hermite normal form.  Column i of
the result is a flow-up class with the smallest possible leading entry.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import EdgeLabeledGraph


@dataclass(frozen=True)
class IntegerLatticeBasis:
    columns: tuple[tuple[int, ...], ...]
    index: int

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(c[i] for i, c in enumerate(self.columns))


def _require_integer(g):
    if not g.domain.is_integer:
        raise TypeError("the lattice route needs the integer domain")


def integer_kernel(rows: list[list[int]], ncols: int) -> list[list[int]]:
    """Z-basis of {x in Z^ncols : A x = 0} for the matrix with these rows.

    Row-reduces [A^T | I] with unimodular integer row operations; the identity
    parts of rows whose A^T part vanishes span the kernel.
    """
    m = len(rows)
    aug = [[rows[r][c] for r in range(m)] + [int(c == k) for k in range(ncols)]
           for c in range(ncols)]
    pivot_row = 0
    for col in range(m):
        while True:
            nz = [r for r in range(pivot_row, ncols) if aug[r][col]]
            if not nz:
                break
            p = min(nz, key=lambda r: abs(aug[r][col]))
            aug[pivot_row], aug[p] = aug[p], aug[pivot_row]
            piv = aug[pivot_row]
            done = True
            for r in range(pivot_row + 1, ncols):
                if aug[r][col]:
                    q = aug[r][col] // piv[col]
                    row = aug[r]
                    for k in range(col, m + ncols):
                        row[k] -= q * piv[k]
                    if row[col]:
                        done = False
            if done:
                pivot_row += 1
                break
    return [row[m:] for row in aug[pivot_row:]]


def hermite_lower(generators: list[list[int]], n: int) -> list[list[int]]:
    """Lower-triangular HNF (as columns) of the full-rank lattice spanned by generators.

    Column i is zero above row i, has a positive diagonal entry, and every
    entry to the left of a diagonal lies in [0, diagonal).
    """
    gens = [list(v) for v in generators if any(v)]
    basis = []
    for row in range(n):
        while True:
            nz = [v for v in gens if v[row]]
            if len(nz) <= 1:
                break
            p = min(nz, key=lambda v: abs(v[row]))
            for v in nz:
                if v is not p:
                    q = v[row] // p[row]
                    for k in range(row, n):
                        v[k] -= q * p[k]
            gens = [v for v in gens if any(v)]
        nz = [v for v in gens if v[row]]
        if not nz:
            raise ValueError("generators do not span a full-rank lattice")
        p = nz[0]
        gens.remove(p)
        if p[row] < 0:
            p = [-x for x in p]
        basis.append(p)
    for row in range(n):
        d = basis[row][row]
        for i in range(row):
            q = basis[i][row] // d
            if q:
                col = basis[i]
                for k in range(row, n):
                    col[k] -= q * basis[row][k]
    return basis


def hnf_flow_up_basis(g: EdgeLabeledGraph) -> IntegerLatticeBasis:
    _require_integer(g)
    n, E = g.n, len(g.edges)
    rows = []
    for e_idx, e in enumerate(g.edges):
        row = [0] * (n + E)
        row[e.u - 1] += 1
        row[e.v - 1] -= 1
        row[n + e_idx] = e.label
        rows.append(row)
    if rows:
        kernel = integer_kernel(rows, n + E)
        gens = [v[:n] for v in kernel]
    else:
        gens = [[1]]
    cols = hermite_lower(gens, n)
    index = 1
    for i, c in enumerate(cols):
        index *= c[i]
    return IntegerLatticeBasis(tuple(tuple(c) for c in cols), index)


def lattice_index(g: EdgeLabeledGraph) -> int:
    """[Z^n : L], the product of the HNF diagonal."""
    return hnf_flow_up_basis(g).index


def reduce_vector(basis: IntegerLatticeBasis, f) -> tuple[int, ...]:
    """Remainder of f after subtracting HNF columns top-down; zero iff f is in L."""
    r = list(f)
    for i, col in enumerate(basis.columns):
        q = r[i] // col[i]
        if q:
            for k in range(i, len(r)):
                r[k] -= q * col[k]
    return tuple(r)
