"""Command line front end.

Exit status is 0 when the verdict is positive, 1 when it is negative and 2 for
usage, parse or validation errors.  ``--format machine`` prints one
``key=value`` pair per line; values use the canonical element text.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .basis import (
    NonSplineColumn,
    NotInSpanError,
    SingularMatrixError,
    check_basis,
    coordinates,
    tree_flow_up_basis,
)
from .files import (
    FileFormatError,
    format_graph,
    format_spline,
    format_splines,
    parse_basis_file,
    parse_graph_file,
    parse_spline_file,
    parse_splines_in,
)
from .graph import Permutation, ValidationError, classify_graph, reorder_graph
from .homog import (
    NotHomogeneous,
    VariableClash,
    degree_sum_check,
    homogenize_graph,
    homogenize_spline,
    reduced_witness_check,
)
from .lattice import hnf_flow_up_basis
from .qvalue import UnsupportedFamily, oracle_routes, q_graph
from .ring import Domain, ParseError, format_elem
from .spline import is_spline, permute_spline


class UsageError(Exception):
    pass


class Report:
    """Ordered key/value lines, rendered for people or for scripts."""

    def __init__(self, fmt: str):
        self.fmt = fmt
        self.items: list[tuple[str, str]] = []

    def add(self, key: str, value) -> None:
        if isinstance(value, bool):
            value = "true" if value else "false"
        elif not isinstance(value, str):
            value = format_elem(value)
        self.items.append((key, value))

    def render(self) -> str:
        if self.fmt == "machine":
            return "".join(f"{k}={v}\n" for k, v in self.items)
        width = max((len(k) for k, _ in self.items), default=0)
        return "".join(f"{k.replace('_', ' '):<{width}}  {v}\n" for k, v in self.items)


def _emit(text: str, out_path) -> None:
    if out_path:
        Path(out_path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# verbs
# ---------------------------------------------------------------------------

def cmd_qvalue(args, rep: Report) -> int:
    g = parse_graph_file(args.graph)
    rep.add("class", classify_graph(g).describe())
    q = q_graph(g, experimental_lattice=args.experimental_lattice)
    rep.add("q", q.value)
    rep.add("provenance", q.provenance.value)
    status = 0
    if args.oracle:
        for name, value in oracle_routes(g).items():
            rep.add(name, value)
            if value != q.value:
                rep.add(name + "_mismatch", True)
                status = 1
    return status


def cmd_check_spline(args, rep: Report) -> int:
    g = parse_graph_file(args.graph)
    status = 0
    for k, F in enumerate(parse_spline_file(args.splines, g), 1):
        report = is_spline(g, F)
        rep.add(f"spline.{k}", report.ok)
        for edge, diff in report.failures:
            rep.add(f"spline.{k}.edge.{edge}", diff)
        if not report.ok:
            status = 1
    return status


def cmd_check_basis(args, rep: Report) -> int:
    g = parse_graph_file(args.graph)
    basis = parse_basis_file(args.basis, g)
    try:
        v = check_basis(g, basis)
    except NonSplineColumn as exc:
        rep.add("is_basis", False)
        rep.add("error", str(exc))
        return 1
    rep.add("is_basis", v.is_basis)
    rep.add("det", v.det)
    rep.add("q", v.q.value)
    rep.add("ratio", "not-divisible" if v.ratio is None else v.ratio)
    if v.experimental:
        rep.add("experimental", True)
    return 0 if v.is_basis else 1


def cmd_gen_basis(args, rep: Report) -> int:
    g = parse_graph_file(args.graph)
    method = args.method
    is_tree = len(g.edges) == g.n - 1
    if method == "auto":
        method = "tree" if is_tree else "hnf"
    if method == "tree":
        if not is_tree:
            raise UsageError("--method tree needs a tree")
        cols = list(tree_flow_up_basis(g))
    else:
        if not g.domain.is_integer:
            raise UsageError("--method hnf needs 'ring integer'")
        cols = hnf_flow_up_basis(g).columns
    _emit(format_splines(cols), args.output)
    return 0


def cmd_coords(args, rep: Report) -> int:
    g = parse_graph_file(args.graph)
    basis = parse_basis_file(args.basis, g)
    status = 0
    for k, F in enumerate(parse_spline_file(args.splines, g), 1):
        try:
            rep.add(f"coords.{k}", format_spline(coordinates(basis, F)))
        except NotInSpanError as exc:
            rep.add(f"coords.{k}", f"not-in-span (coordinate {exc.index})")
            status = 1
    return status


def _domain_from_vars(text):
    names = [v for v in text.replace(",", " ").split() if v]
    if not names:
        raise UsageError("--vars needs at least one variable")
    return Domain.poly(*names)


def cmd_homogenize(args, rep: Report) -> int:
    g = parse_graph_file(args.graph) if args.graph else None
    if g is None and not args.spline:
        raise UsageError("give a graph file, --spline, or both")
    if args.spline:
        if g is not None:
            splines = parse_spline_file(args.spline, g)
        elif args.vars:
            text = Path(args.spline).read_text(encoding="utf-8")
            splines = parse_splines_in(text, _domain_from_vars(args.vars), None, args.spline)
        else:
            raise UsageError("--spline without a graph needs --vars")
        _emit(format_splines(homogenize_spline(F, args.var) for F in splines), args.output)
    else:
        _emit(format_graph(homogenize_graph(g, args.var).hat), args.output)
    return 0


def cmd_degree_check(args, rep: Report) -> int:
    g = parse_graph_file(args.graph)
    basis = parse_basis_file(args.basis, g)
    res = degree_sum_check(g, basis)
    rep.add("degree_sum", str(res.lhs))
    rep.add("expected", str(res.rhs))
    rep.add("result", "pass (inconclusive)" if res.passed else "fail (not reduced)")
    return 0 if res.passed else 1


def cmd_reduced_witness(args, rep: Report) -> int:
    g = parse_graph_file(args.graph)
    basis = parse_basis_file(args.basis, g)
    status = 0
    for k, F in enumerate(parse_spline_file(args.splines, g), 1):
        try:
            res = reduced_witness_check(g, basis, F)
        except NotInSpanError as exc:
            rep.add(f"witness.{k}", f"not-in-span (coordinate {exc.index})")
            status = 1
            continue
        rep.add(f"witness.{k}.coords", format_spline(res.coords))
        rep.add(f"witness.{k}", "pass" if res.passed else f"violation {res.index}")
        if not res.passed:
            status = 1
    return status


def _parse_perm(args, n):
    if args.perm:
        return Permutation(tuple(int(t) for t in args.perm.replace(",", " ").split()))
    cycles = []
    text = args.cycles.strip()
    for chunk in text.replace(")", "").split("("):
        chunk = chunk.strip()
        if chunk:
            parts = chunk.replace(",", " ").split()
            if len(parts) == 1 and len(parts[0]) > 1:
                parts = list(parts[0])
            cycles.append([int(p) for p in parts])
    return Permutation.from_cycles(n, cycles)


def cmd_reorder(args, rep: Report) -> int:
    g = parse_graph_file(args.graph)
    if bool(args.perm) == bool(args.cycles):
        raise UsageError("give exactly one of --perm or --cycles")
    sigma = _parse_perm(args, g.n)
    if len(sigma) != g.n:
        raise UsageError(f"permutation of length {len(sigma)} for {g.n} vertices")
    if args.spline:
        splines = parse_spline_file(args.spline, g)
        _emit(format_splines(permute_spline(F, sigma) for F in splines), args.output)
    else:
        _emit(format_graph(reorder_graph(g, sigma)), args.output)
    return 0


def cmd_selftest(args, rep: Report) -> int:
    from .selftest import run_selftest
    ok, items = run_selftest(args.seed)
    for k, v in items:
        rep.add(k, v)
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gsplines", description="Generalized spline bases on edge-labeled graphs.")
    p.add_argument("--format", choices=("text", "machine"), default="text")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="verb", required=True)

    s = sub.add_parser("qvalue", help="compute Q_G")
    s.add_argument("graph")
    s.add_argument("--oracle", action="store_true", help="also print independent routes; exit 1 on mismatch")
    s.add_argument("--experimental-lattice", action="store_true",
                   help="use the lattice index for graphs outside the known families (integers only)")
    s.set_defaults(func=cmd_qvalue)

    s = sub.add_parser("check-spline", help="test each line of a spline file")
    s.add_argument("graph")
    s.add_argument("splines")
    s.set_defaults(func=cmd_check_spline)

    s = sub.add_parser("check-basis", help="compare the determinant with Q_G")
    s.add_argument("graph")
    s.add_argument("basis")
    s.set_defaults(func=cmd_check_basis)

    s = sub.add_parser("gen-basis", help="write a basis file")
    s.add_argument("graph")
    s.add_argument("--method", choices=("auto", "tree", "hnf"), default="auto")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_gen_basis)

    s = sub.add_parser("coords", help="coordinates of splines in a basis")
    s.add_argument("graph")
    s.add_argument("basis")
    s.add_argument("splines")
    s.set_defaults(func=cmd_coords)

    s = sub.add_parser("homogenize", help="homogenize a graph or splines")
    s.add_argument("graph", nargs="?")
    s.add_argument("--spline", help="spline file to homogenize instead of the graph")
    s.add_argument("--vars", help="variables of the spline file when no graph is given")
    s.add_argument("--var", default="z", help="name of the new variable (default z)")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_homogenize)

    s = sub.add_parser("degree-check", help="degree-sum test for reduced bases")
    s.add_argument("graph")
    s.add_argument("basis")
    s.set_defaults(func=cmd_degree_check)

    s = sub.add_parser("reduced-witness", help="test deg(r_i G_i) <= deg F for given splines")
    s.add_argument("graph")
    s.add_argument("basis")
    s.add_argument("splines")
    s.set_defaults(func=cmd_reduced_witness)

    s = sub.add_parser("reorder", help="relabel vertices: new vertex i is old vertex sigma(i)")
    s.add_argument("graph")
    s.add_argument("--perm", help="images sigma(1) ... sigma(n)")
    s.add_argument("--cycles", help="cycle notation, e.g. '(1 3 5 2 4)'")
    s.add_argument("--spline", help="transport the splines in this file instead")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_reorder)

    s = sub.add_parser("selftest", help="run built-in regressions and a seeded sweep")
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_selftest)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    rep = Report(args.format)
    try:
        status = args.func(args, rep)
    except (UsageError, FileFormatError, ValidationError, ParseError, VariableClash,
            NotHomogeneous, UnsupportedFamily, SingularMatrixError, OSError, ValueError, TypeError) as exc:
        sys.stdout.write(rep.render())
        print(f"gsplines: error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(rep.render())
    return status


if __name__ == "__main__":
    sys.exit(main())
