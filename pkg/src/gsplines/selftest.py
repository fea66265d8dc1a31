"""Built-in regression cases and a seeded random sweep.

``run_selftest`` returns ordered (key, value) pairs plus an overall verdict,
so the command line can print them in either output format.
"""

from __future__ import annotations

import random

from .basis import check_basis, coordinates, tree_flow_up_basis, witness_d33
from .basis import determinant
from .files import format_spline
from .graph import Permutation, cycle_graph, diamond_graph, path_graph, tree_graph
from .homog import homogeneous_components, homogenize_poly, homogenize_spline, reduced_witness_check
from .lattice import hnf_flow_up_basis, lattice_index
from .qvalue import q_d33, q_graph
from .ring import Domain, format_elem, parse_elem
from .spline import is_spline, permute_spline

XY = Domain.poly("x", "y")
X = Domain.poly("x")

# Basis of a four-cycle with labels x^2+1, x, y, y+1 that is a basis but not reduced.
C4_LABELS = ("x^2 + 1", "x", "y", "y + 1")
C4_BASIS = (
    ("1", "1", "1", "1"),
    ("0", "x^2 + 1", "x^2 + 1", "x^2*y + x^2 + y + 1"),
    ("0", "0", "x", "x*y + x"),
    ("0", "0", "0", "y^2 + y"),
)
C4_WITNESS = ("x", "x", "x*y + x", "x")


def _p(s, domain=XY):
    return parse_elem(s, domain)


def c4_example():
    g = cycle_graph([_p(s) for s in C4_LABELS])
    basis = [tuple(_p(s) for s in row) for row in C4_BASIS]
    return g, basis


def regression_values() -> list[tuple[str, str]]:
    """The fixed worked values, formatted canonically."""
    out = []
    out.append(("homogenize", format_elem(homogenize_poly(_p("x^2*y + x^2 + y + 1")))))
    out.append(("homogenize_short", format_elem(homogenize_poly(_p("y^2 + y")))))
    g, basis = c4_example()
    for k, F in enumerate(basis, 1):
        out.append((f"hat_basis.{k}", format_spline(homogenize_spline(F))))
    F5 = Domain.poly("f1", "f2", "f3", "f4", "f5")
    F = tuple(F5.var(v) for v in F5.variables)
    sigma = Permutation.from_cycles(5, [(1, 3, 5, 2, 4)])
    out.append(("reorder", format_spline(permute_spline(F, sigma))))
    W = tuple(_p(s) for s in C4_WITNESS)
    out.append(("coords", format_spline(coordinates(basis, W))))
    res = reduced_witness_check(g, basis, W)
    out.append(("reduced_witness", "pass" if res.passed else f"violation {res.index}"))
    comps = homogeneous_components(tuple(parse_elem(s, X) for s in ("1", "x + 1", "x^2 + 2*x + 1")))
    for d, C in comps.items():
        out.append((f"components.{d}", format_spline(C)))
    out.append(("q_d33", str(q_d33([2, 6, 4, 10, 4]).value)))
    out.append(("witness_d33_det", str(abs(determinant(witness_d33([2, 6, 4, 10, 4])[0])))))
    out.append(("hnf_c3", " | ".join(format_spline(c) for c in hnf_flow_up_basis(cycle_graph([2, 4, 6])).columns)))
    return out


EXPECTED = {
    "homogenize": "x^2*y + x^2*z + y*z^2 + z^3",
    "homogenize_short": "y^2 + y*z",
    "hat_basis.1": "1, 1, 1, 1",
    "hat_basis.2": "0, x^2*z + z^3, x^2*z + z^3, x^2*y + x^2*z + y*z^2 + z^3",
    "hat_basis.3": "0, 0, x*z, x*y + x*z",
    "hat_basis.4": "0, 0, 0, y^2 + y*z",
    "reorder": "f3, f4, f5, f1, f2",
    "coords": "x, 0, y, -x",
    "reduced_witness": "violation 3",
    "components.0": "1, 1, 1",
    "components.1": "0, x, 2*x",
    "components.2": "0, 0, x^2",
    "q_d33": "480",
    "witness_d33_det": "1920",
    "hnf_c3": "1, 1, 1 | 0, 2, 6 | 0, 0, 12",
}


def random_sweep(seed: int, cases: int = 40) -> list[str]:
    """Compare lattice index with Q_G and check the HNF basis; returns failures."""
    rng = random.Random(seed)
    failures = []
    for k in range(cases):
        kind = ("cycle", "diamond", "tree")[k % 3]
        if kind == "cycle":
            g = cycle_graph([rng.randint(1, 30) for _ in range(rng.randint(3, 6))])
        elif kind == "diamond":
            m, n = rng.randint(3, 4), rng.randint(3, 4)
            g = diamond_graph([rng.randint(1, 30) for _ in range(m + n - 1)], m, n)
        else:
            n = rng.randint(2, 7)
            parents = [rng.randint(1, i + 1) for i in range(n - 1)]
            g = tree_graph(parents, [rng.randint(1, 30) for _ in parents])
        q = q_graph(g).value
        basis = hnf_flow_up_basis(g)
        if lattice_index(g) != q or not check_basis(g, basis.columns).is_basis:
            failures.append(f"{kind} labels {list(g.labels)}")
    return failures


def run_selftest(seed: int = 0) -> tuple[bool, list[tuple[str, str]]]:
    report = []
    ok = True
    for key, value in regression_values():
        report.append((key, value))
        if EXPECTED.get(key) != value:
            ok = False
            report.append((key + ".expected", EXPECTED.get(key, "<none>")))
    g, basis = c4_example()
    verdict = check_basis(g, basis)
    report.append(("c4_is_basis", "true" if verdict.is_basis else "false"))
    ok &= verdict.is_basis
    x = X.var("x")
    t = path_graph([x * x, x + 1])
    tb = tree_flow_up_basis(t)
    tree_ok = check_basis(t, tb).is_basis and all(is_spline(t, F) for F in tb)
    report.append(("tree_basis", "true" if tree_ok else "false"))
    ok &= tree_ok
    failures = random_sweep(seed)
    report.append(("sweep.seed", str(seed)))
    report.append(("sweep.failures", str(len(failures))))
    for f in failures:
        report.append(("sweep.failure", f))
    ok &= not failures
    report.append(("selftest", "pass" if ok else "fail"))
    return ok, report
