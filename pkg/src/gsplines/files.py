"""Line-based text formats for graphs and splines.

Graph file::

    # comments run to end of line
    ring poly x y          # or: ring integer
    vertices 4
    edge 1 2 x^2 + 1       # edge order fixes l_1, l_2, ...

Spline file: one spline per line, entries separated by commas.
"""

from __future__ import annotations

import re
from pathlib import Path

from .graph import EdgeLabeledGraph, ValidationError, validate_graph
from .ring import Domain, ParseError, RingElem, format_elem, parse_elem


class FileFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None, source: str = "<input>"):
        where = f"{source}:{line}: " if line is not None else f"{source}: "
        super().__init__(where + message)
        self.line = line


def _lines(text):
    for no, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if body:
            yield no, body


def parse_graph_text(text: str, source: str = "<input>") -> EdgeLabeledGraph:
    domain = None
    n = None
    edges = []
    for no, body in _lines(text):
        word, _, rest = body.partition(" ")
        rest = rest.strip()
        if word == "ring":
            if domain is not None:
                raise FileFormatError("ring declared twice", no, source)
            parts = rest.split()
            try:
                if parts == ["integer"]:
                    domain = Domain.integer()
                elif parts and parts[0] == "poly":
                    domain = Domain.poly(*parts[1:])
                else:
                    raise ValueError("expected 'ring integer' or 'ring poly <var> ...'")
            except ValueError as exc:
                raise FileFormatError(str(exc), no, source) from None
        elif word == "vertices":
            if n is not None:
                raise FileFormatError("vertices declared twice", no, source)
            if not rest.isdigit() or int(rest) < 1:
                raise FileFormatError(f"bad vertex count {rest!r}", no, source)
            n = int(rest)
        elif word == "edge":
            if domain is None or n is None:
                raise FileFormatError("edge before ring and vertices", no, source)
            parts = rest.split(None, 2)
            if len(parts) < 3:
                raise FileFormatError("expected 'edge <u> <v> <label>'", no, source)
            u, v, expr = parts
            if not (u.isdigit() and v.isdigit()):
                raise FileFormatError(f"bad vertex index in {u!r} {v!r}", no, source)
            try:
                label = parse_elem(expr, domain)
            except ParseError as exc:
                raise FileFormatError(f"label: {exc}", no, source) from None
            edges.append((int(u), int(v), label, no))
        else:
            raise FileFormatError(f"unknown directive {word!r}", no, source)
    if domain is None or n is None:
        raise FileFormatError("missing 'ring' or 'vertices' line", None, source)
    g = EdgeLabeledGraph.build(n, [e[:3] for e in edges], domain, validate=False)
    try:
        validate_graph(g)
    except ValidationError as exc:
        line = None
        m = re.match(r"edge (\d+):", str(exc))
        if m and 1 <= int(m.group(1)) <= len(edges):
            line = edges[int(m.group(1)) - 1][3]
        raise FileFormatError(str(exc), line, source) from None
    return g


def parse_graph_file(path) -> EdgeLabeledGraph:
    path = Path(path)
    return parse_graph_text(path.read_text(encoding="utf-8"), str(path))


def parse_spline_text(text: str, g: EdgeLabeledGraph, source: str = "<input>") -> list[tuple]:
    return parse_splines_in(text, g.domain, g.n, source)


def parse_splines_in(text: str, domain: Domain, n: int | None = None,
                     source: str = "<input>") -> list[tuple]:
    """Parse spline lines over a domain; n, when given, fixes the length."""
    out = []
    for no, body in _lines(text):
        items = [s.strip() for s in body.split(",")]
        if n is not None and len(items) != n:
            raise FileFormatError(f"{len(items)} entries, graph has {n} vertices", no, source)
        if out and len(items) != len(out[0]):
            raise FileFormatError(f"{len(items)} entries, earlier lines have {len(out[0])}", no, source)
        try:
            out.append(tuple(parse_elem(s, domain) for s in items))
        except ParseError as exc:
            raise FileFormatError(str(exc), no, source) from None
    return out


def parse_spline_file(path, g: EdgeLabeledGraph) -> list[tuple]:
    path = Path(path)
    return parse_spline_text(path.read_text(encoding="utf-8"), g, str(path))


def parse_basis_file(path, g: EdgeLabeledGraph) -> list[tuple]:
    splines = parse_spline_file(path, g)
    if len(splines) != g.n:
        raise FileFormatError(f"a basis needs {g.n} splines, found {len(splines)}", None, str(path))
    return splines


def format_spline(F) -> str:
    return ", ".join(format_elem(f) for f in F)


def format_splines(splines) -> str:
    return "".join(format_spline(F) + "\n" for F in splines)


def format_graph(g: EdgeLabeledGraph) -> str:
    lines = [f"ring {g.domain}", f"vertices {g.n}"]
    lines += [f"edge {e.u} {e.v} {format_elem(e.label)}" for e in g.edges]
    return "\n".join(lines) + "\n"


def format_value(a: RingElem) -> str:
    return format_elem(a)
