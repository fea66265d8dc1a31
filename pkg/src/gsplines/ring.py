"""Exact arithmetic over the integers and over Q[x1, ..., xd].

Integers are plain Python ``int``.  Polynomials are immutable :class:`Poly`
values: a sparse map from exponent tuples to nonzero ``Fraction``
coefficients, tagged with the ordered tuple of variable names.

The module-level functions (``gcd``, ``lcm``, ``exact_div``, ``normalize``,
...) accept either kind of element but refuse to mix them, and refuse to mix
polynomials over different variable lists.
"""

from __future__ import annotations

import operator
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd as _igcd
from typing import Iterable, Mapping, Union

__all__ = [
    "Poly",
    "Domain",
    "INTEGER",
    "RingElem",
    "ZeroElement",
    "DomainMismatchError",
    "NotDivisibleError",
    "ParseError",
    "arith",
    "gcd",
    "gcd_many",
    "lcm",
    "lcm_many",
    "exact_div",
    "divides",
    "is_unit",
    "normalize",
    "total_degree",
    "domain_of",
    "parse_elem",
    "format_elem",
]


class DomainMismatchError(TypeError):
    pass


class NotDivisibleError(ArithmeticError):
    pass


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at column {position + 1})")
        self.position = position


class _ZeroElementType:
    """Degree marker of the zero polynomial."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "ZeroElement"

    def __reduce__(self):
        return (_ZeroElementType, ())


ZeroElement = _ZeroElementType()


# ---------------------------------------------------------------------------
# raw sparse polynomials: dict[tuple[int, ...], Fraction]
# ---------------------------------------------------------------------------

def _grlex(e):
    return (sum(e), e)


def _lead(a):
    return max(a, key=_grlex)


def _add(a, b):
    r = dict(a)
    for e, c in b.items():
        s = r.get(e, 0) + c
        if s:
            r[e] = s
        else:
            r.pop(e, None)
    return r


def _neg(a):
    return {e: -c for e, c in a.items()}


def _sub(a, b):
    return _add(a, _neg(b))


def _mul(a, b):
    r = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(i + j for i, j in zip(e1, e2))
            s = r.get(e, 0) + c1 * c2
            if s:
                r[e] = s
            else:
                r.pop(e, None)
    return r


def _scale(a, c):
    if not c:
        return {}
    return {e: v * c for e, v in a.items()}


def _pow(a, k, nv):
    r = {(0,) * nv: Fraction(1)}
    base = a
    while k:
        if k & 1:
            r = _mul(r, base)
        k >>= 1
        if k:
            base = _mul(base, base)
    return r


def _divexact(a, b):
    """Quotient of a by b, or None when b does not divide a."""
    if not a:
        return {}
    lb = _lead(b)
    cb = b[lb]
    r = dict(a)
    q = {}
    while r:
        lm = _lead(r)
        if any(i < j for i, j in zip(lm, lb)):
            return None
        t = tuple(i - j for i, j in zip(lm, lb))
        c = r[lm] / cb
        q[t] = c
        for e, v in b.items():
            m = tuple(i + j for i, j in zip(e, t))
            s = r.get(m, 0) - c * v
            if s:
                r[m] = s
            else:
                r.pop(m, None)
    return q


def _deg_in(a, k):
    return max((e[k] for e in a), default=-1)


def _coeff_in(a, k, j):
    """Coefficient of x_k**j, as a polynomial free of x_k."""
    out = {}
    for e, c in a.items():
        if e[k] == j:
            out[e[:k] + (0,) + e[k + 1:]] = c
    return out


def _shift(a, k, j):
    if not j:
        return a
    return {e[:k] + (e[k] + j,) + e[k + 1:]: c for e, c in a.items()}


def _main_var(a, b):
    for k in range(len(next(iter(a or b))) - 1, -1, -1):
        if _deg_in(a, k) > 0 or _deg_in(b, k) > 0:
            return k
    return None


def _one(nv):
    return {(0,) * nv: Fraction(1)}


def _content(a, k):
    """gcd of the coefficients of a viewed as a polynomial in x_k."""
    g = {}
    for j in range(_deg_in(a, k), -1, -1):
        c = _coeff_in(a, k, j)
        if c:
            g = _gcd(g, c)
            if len(g) == 1 and not any(next(iter(g))):
                break
    return g


def _prem(a, b, k):
    db = _deg_in(b, k)
    lcb = _coeff_in(b, k, db)
    r = a
    e = _deg_in(a, k) - db + 1
    while r and _deg_in(r, k) >= db:
        dr = _deg_in(r, k)
        lcr = _coeff_in(r, k, dr)
        r = _sub(_mul(lcb, r), _shift(_mul(lcr, b), k, dr - db))
        e -= 1
    if e > 0 and r:
        r = _mul(_pow(lcb, e, len(next(iter(lcb)))), r)
    return r


def _gcd(a, b):
    """A gcd of a and b in Q[x1..xd], determined up to a constant factor.

    Recursive content / primitive-part reduction with the subresultant
    remainder sequence in the highest variable that occurs.
    """
    if not a:
        return dict(b)
    if not b:
        return dict(a)
    nv = len(next(iter(a)))
    k = _main_var(a, b)
    if k is None:
        return _one(nv)
    if _deg_in(a, k) == 0:
        return _gcd(a, _content(b, k))
    if _deg_in(b, k) == 0:
        return _gcd(_content(a, k), b)
    ca, cb = _content(a, k), _content(b, k)
    d = _gcd(ca, cb)
    A = _divexact(a, ca)
    B = _divexact(b, cb)
    if _deg_in(A, k) < _deg_in(B, k):
        A, B = B, A
    g = _one(nv)
    h = _one(nv)
    while True:
        delta = _deg_in(A, k) - _deg_in(B, k)
        R = _prem(A, B, k)
        if not R:
            break
        if _deg_in(R, k) == 0:
            return d
        A = B
        B = _divexact(R, _mul(g, _pow(h, delta, nv)))
        g = _coeff_in(A, k, _deg_in(A, k))
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = _divexact(_pow(g, delta, nv), _pow(h, delta - 1, nv))
    return _mul(d, _divexact(B, _content(B, k)))


# ---------------------------------------------------------------------------
# public polynomial type
# ---------------------------------------------------------------------------

Scalar = Union[int, Fraction]


class Poly:
    """Immutable sparse polynomial with rational coefficients."""

    __slots__ = ("vars", "_terms", "_hash")

    def __init__(self, terms: Mapping[tuple, Scalar], vars: Iterable[str]):
        vars = tuple(vars)
        if not vars:
            raise ValueError("a polynomial domain needs at least one variable")
        nv = len(vars)
        clean = {}
        for e, c in terms.items():
            e = tuple(int(i) for i in e)
            if len(e) != nv:
                raise ValueError(f"exponent {e} does not match variables {vars}")
            if any(i < 0 for i in e):
                raise ValueError(f"negative exponent in {e}")
            c = Fraction(c)
            if c:
                clean[e] = clean.get(e, 0) + c
                if not clean[e]:
                    del clean[e]
        object.__setattr__(self, "vars", vars)
        object.__setattr__(self, "_terms", clean)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _raw(cls, terms, vars):
        p = object.__new__(cls)
        object.__setattr__(p, "vars", vars)
        object.__setattr__(p, "_terms", terms)
        object.__setattr__(p, "_hash", None)
        return p

    @classmethod
    def constant(cls, c: Scalar, vars: Iterable[str]) -> Poly:
        vars = tuple(vars)
        return cls({(0,) * len(vars): c}, vars)

    @classmethod
    def var(cls, name: str, vars: Iterable[str]) -> Poly:
        vars = tuple(vars)
        e = tuple(int(v == name) for v in vars)
        if sum(e) != 1:
            raise ValueError(f"unknown variable {name!r}")
        return cls({e: 1}, vars)

    def __setattr__(self, key, value):
        raise AttributeError("Poly is immutable")

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and not any(next(iter(self._terms))))

    def constant_value(self) -> Fraction:
        return self._terms.get((0,) * len(self.vars), Fraction(0))

    def leading_term(self) -> tuple[tuple, Fraction]:
        e = _lead(self._terms)
        return e, self._terms[e]

    def degree(self):
        return total_degree(self)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    def subs(self, values: Mapping[str, Scalar]) -> Poly:
        """Substitute scalars for some variables (the domain is unchanged)."""
        idx = {self.vars.index(v): Fraction(c) for v, c in values.items()}
        out = {}
        for e, c in self._terms.items():
            f = c
            e2 = list(e)
            for i, val in idx.items():
                f *= val ** e[i]
                e2[i] = 0
            e2 = tuple(e2)
            out[e2] = out.get(e2, 0) + f
        return Poly(out, self.vars)

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.vars != self.vars:
                raise DomainMismatchError(
                    f"polynomials over {self.vars} and {other.vars}")
            return other._terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return {(0,) * len(self.vars): Fraction(other)} if other else {}
        return None

    def _wrap(self, terms):
        return Poly._raw(terms, self.vars)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._wrap(_add(self._terms, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._wrap(_sub(self._terms, o))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._wrap(_sub(o, self._terms))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._wrap(_mul(self._terms, o))

    __rmul__ = __mul__

    def __neg__(self):
        return self._wrap(_neg(self._terms))

    def __pos__(self):
        return self

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        return self._wrap(_pow(self._terms, k, len(self.vars)))

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.vars == other.vars and self._terms == other._terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                h = hash(self.constant_value())
            else:
                h = hash((self.vars, frozenset(self._terms.items())))
            object.__setattr__(self, "_hash", h)
        return self._hash

    def __repr__(self):
        return f"Poly({format_elem(self)!r}, vars={self.vars})"

    def __str__(self):
        return format_elem(self)

    def __reduce__(self):
        return (Poly, (self._terms, self.vars))


RingElem = Union[int, Poly]


@dataclass(frozen=True)
class Domain:
    """Which GCD domain elements live in: Z, or Q[variables]."""

    kind: str
    variables: tuple[str, ...] = ()

    def __post_init__(self):
        if self.kind not in ("integer", "poly"):
            raise ValueError(f"unknown domain kind {self.kind!r}")
        if self.kind == "poly":
            if not self.variables:
                raise ValueError("polynomial domain needs variables")
            if len(set(self.variables)) != len(self.variables):
                raise ValueError(f"repeated variable in {self.variables}")
            for v in self.variables:
                if not _IDENT.fullmatch(v):
                    raise ValueError(f"bad variable name {v!r}")
        elif self.variables:
            raise ValueError("the integer domain has no variables")

    @classmethod
    def integer(cls) -> Domain:
        return cls("integer")

    @classmethod
    def poly(cls, *variables: str) -> Domain:
        return cls("poly", tuple(variables))

    @property
    def is_integer(self) -> bool:
        return self.kind == "integer"

    def zero(self) -> RingElem:
        return 0 if self.is_integer else Poly({}, self.variables)

    def one(self) -> RingElem:
        return 1 if self.is_integer else Poly.constant(1, self.variables)

    def const(self, c: Scalar) -> RingElem:
        if self.is_integer:
            c = Fraction(c)
            if c.denominator != 1:
                raise ValueError(f"{c} is not an integer")
            return int(c)
        return Poly.constant(c, self.variables)

    def var(self, name: str) -> Poly:
        if self.is_integer:
            raise DomainMismatchError("the integer domain has no variables")
        return Poly.var(name, self.variables)

    def contains(self, a) -> bool:
        if self.is_integer:
            return isinstance(a, int) and not isinstance(a, bool)
        return isinstance(a, Poly) and a.vars == self.variables

    def __str__(self):
        if self.is_integer:
            return "integer"
        return "poly " + " ".join(self.variables)


INTEGER = Domain.integer()


def domain_of(a: RingElem) -> Domain:
    if isinstance(a, Poly):
        return Domain("poly", a.vars)
    if isinstance(a, int) and not isinstance(a, bool):
        return INTEGER
    raise TypeError(f"not a ring element: {a!r}")


def _same(a, b):
    da, db = domain_of(a), domain_of(b)
    if da != db:
        raise DomainMismatchError(f"elements from {da} and {db}")
    return da


# ---------------------------------------------------------------------------
# ring operations
# ---------------------------------------------------------------------------

_ARITH = {"add": operator.add, "sub": operator.sub, "mul": operator.mul}


def arith(a: RingElem, b: RingElem, op: str) -> RingElem:
    """Add, Sub or Mul with a strict same-domain check."""
    _same(a, b)
    try:
        f = _ARITH[op.lower()]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None
    return f(a, b)


def normalize(a: RingElem) -> RingElem:
    """Canonical associate: |a| for integers, grlex-monic for polynomials."""
    if isinstance(a, Poly):
        if not a:
            return a
        _, c = a.leading_term()
        if c == 1:
            return a
        return a._wrap(_scale(a._terms, 1 / c))
    domain_of(a)
    return abs(a)


def gcd(a: RingElem, b: RingElem) -> RingElem:
    _same(a, b)
    if isinstance(a, Poly):
        return normalize(a._wrap(_gcd(a._terms, b._terms)))
    return _igcd(a, b)


def lcm(a: RingElem, b: RingElem) -> RingElem:
    _same(a, b)
    if not a or not b:
        return a * 0
    return normalize(exact_div(a * b, gcd(a, b)))


def gcd_many(elems: Iterable[RingElem]) -> RingElem:
    elems = list(elems)
    if not elems:
        raise ValueError("gcd of an empty collection")
    return reduce(gcd, elems[1:], normalize(elems[0]))


def lcm_many(elems: Iterable[RingElem]) -> RingElem:
    elems = list(elems)
    if not elems:
        raise ValueError("lcm of an empty collection")
    return reduce(lcm, elems[1:], normalize(elems[0]))


def exact_div(a: RingElem, b: RingElem) -> RingElem:
    """q with a == b*q; raises NotDivisibleError when no such q exists."""
    _same(a, b)
    if not b:
        raise ZeroDivisionError("exact division by zero")
    if isinstance(a, Poly):
        q = _divexact(a._terms, b._terms)
        if q is None:
            raise NotDivisibleError(f"{b} does not divide {a}")
        return a._wrap(q)
    q, r = divmod(a, b)
    if r:
        raise NotDivisibleError(f"{b} does not divide {a}")
    return q


def divides(b: RingElem, a: RingElem) -> bool:
    """True iff b | a.  Zero divides only zero."""
    _same(a, b)
    if not b:
        return not a
    if isinstance(a, Poly):
        return _divexact(a._terms, b._terms) is not None
    return a % b == 0


def is_unit(a: RingElem) -> bool:
    if isinstance(a, Poly):
        return bool(a) and a.is_constant()
    domain_of(a)
    return a in (1, -1)


def total_degree(a: RingElem):
    """Total degree of a polynomial; ZeroElement for the zero polynomial."""
    if not isinstance(a, Poly):
        raise DomainMismatchError("total degree is defined on polynomial domains only")
    if not a:
        return ZeroElement
    return max(sum(e) for e in a._terms)


# ---------------------------------------------------------------------------
# text form
# ---------------------------------------------------------------------------

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_TOKEN = re.compile(r"(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S)")
_SPACE = re.compile(r"\s*")


def _tokenize(text):
    toks = []
    pos = _SPACE.match(text, 0).end()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        start = m.start()
        if m.group(1) is not None:
            toks.append(("num", int(m.group(1)), start))
        elif m.group(2) is not None:
            toks.append(("var", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", start)
            toks.append((ch, ch, start))
        pos = _SPACE.match(text, m.end()).end()
    toks.append(("end", None, len(text)))
    return toks


class _Parser:
    def __init__(self, text, domain):
        self.toks = _tokenize(text)
        self.i = 0
        self.domain = domain
        self.vars = () if domain.is_integer else domain.variables

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None):
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ParseError(f"expected {kind}, found {what}", tok[2])
        self.i += 1
        return tok

    def const(self, c):
        if self.domain.is_integer:
            return {(): Fraction(c)} if c else {}
        return {(0,) * len(self.vars): Fraction(c)} if c else {}

    def parse(self):
        val = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected {tok[1]!r} (use '*' for products)", tok[2])
        return val

    def expr(self):
        val = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            val = _add(val, rhs) if op == "+" else _sub(val, rhs)
        return val

    def term(self):
        val = self.unary()
        while self.peek()[0] == "*":
            self.take()
            val = _mul(val, self.unary())
        return val

    def unary(self):
        kind = self.peek()[0]
        if kind == "-":
            self.take()
            return _neg(self.unary())
        if kind == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            k = self.take("num")[1]
            nv = len(self.vars) if not self.domain.is_integer else 0
            return _pow(base, k, nv)
        return base

    def atom(self):
        kind, val, pos = self.peek()
        if kind == "num":
            self.take()
            if self.peek()[0] == "/":
                self.take()
                den_tok = self.take("num")
                if den_tok[1] == 0:
                    raise ParseError("zero denominator", den_tok[2])
                return self.const(Fraction(val, den_tok[1]))
            return self.const(val)
        if kind == "var":
            self.take()
            if val not in self.vars:
                raise ParseError(f"unknown variable {val!r}", pos)
            e = tuple(int(v == val) for v in self.vars)
            return {e: Fraction(1)}
        if kind == "(":
            self.take()
            inner = self.expr()
            self.take(")")
            return inner
        what = "end of input" if kind == "end" else repr(val)
        raise ParseError(f"unexpected {what}", pos)


def parse_elem(text: str, domain: Domain) -> RingElem:
    """Parse an element written with + - * ^, rational literals a/b, variables.

    Juxtaposition is not multiplication; parentheses are accepted.
    """
    raw = _Parser(text, domain).parse()
    if domain.is_integer:
        c = raw.get((), Fraction(0))
        if c.denominator != 1:
            raise ParseError(f"{c} is not an integer", 0)
        return int(c)
    return Poly._raw(raw, domain.variables)


def _format_monomial(e, vars):
    parts = []
    for name, k in zip(vars, e):
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append(f"{name}^{k}")
    return "*".join(parts)


def format_elem(a: RingElem) -> str:
    """Canonical text: monomials in descending graded-lex order."""
    if not isinstance(a, Poly):
        domain_of(a)
        return str(a)
    if not a:
        return "0"
    out = []
    for e in sorted(a._terms, key=_grlex, reverse=True):
        c = a._terms[e]
        mono = _format_monomial(e, a.vars)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not out:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)
