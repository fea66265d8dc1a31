from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gsplines.ring import (
    INTEGER,
    DomainMismatchError,
    Domain,
    NotDivisibleError,
    ParseError,
    Poly,
    ZeroElement,
    arith,
    divides,
    exact_div,
    format_elem,
    gcd,
    gcd_many,
    is_unit,
    lcm,
    lcm_many,
    normalize,
    parse_elem,
    total_degree,
)

from helpers import X, XY, factored_polys, nonzero_polys, polys


def P(s, d=XY):
    return parse_elem(s, d)


def Px(s):
    return parse_elem(s, X)


class TestExamples:
    def test_arith(self):
        assert arith(Px("x + 1"), Px("x - 1"), "add") == Px("2*x")
        assert arith(2, 3, "mul") == 6
        assert arith(P("x^2*y"), P("x^2*y"), "sub") == P("0")

    def test_arith_domain_mismatch(self):
        with pytest.raises(DomainMismatchError):
            arith(Px("x"), P("x"), "add")
        with pytest.raises(DomainMismatchError):
            arith(2, Px("x"), "add")

    def test_gcd(self):
        assert gcd(12, 18) == 6
        assert gcd(Px("x^2 - 1"), Px("x^2 + 2*x + 1")) == Px("x + 1")
        assert gcd(P("x^2*y + x*y"), P("x*y^2 + x*y")) == P("x*y")

    def test_gcd_zero(self):
        assert gcd(0, -5) == 5
        assert gcd(0, 0) == 0
        assert gcd(Px("0"), Px("-2*x")) == Px("x")
        assert gcd(Px("0"), Px("0")) == Px("0")

    def test_lcm(self):
        assert lcm(4, 6) == 12
        assert lcm(Px("x"), Px("x^2")) == Px("x^2")
        assert lcm(0, 5) == 0

    def test_exact_div(self):
        assert exact_div(24, 6) == 4
        assert exact_div(Px("x^2 - 1"), Px("x - 1")) == Px("x + 1")
        with pytest.raises(NotDivisibleError):
            exact_div(7, 2)
        with pytest.raises(ZeroDivisionError):
            exact_div(7, 0)
        assert not divides(2, 7) and divides(2, 8)
        assert divides(0, 0) and not divides(0, 3)

    def test_is_unit(self):
        assert is_unit(-1) and is_unit(1) and not is_unit(2) and not is_unit(0)
        assert not is_unit(Px("x"))
        assert is_unit(Px("3/2"))
        assert not is_unit(Px("0"))

    def test_normalize(self):
        assert normalize(-6) == 6
        assert normalize(Px("2*x + 2")) == Px("x + 1")
        assert normalize(0) == 0
        assert normalize(P("-3*x^2*y + x^3")) == P("x^3 - 3*x^2*y")
        assert normalize(P("-2*y + 4")) == P("y - 2")

    def test_total_degree(self):
        assert total_degree(P("x^2*y + x^2 + y + 1")) == 3
        assert total_degree(P("7")) == 0
        assert total_degree(P("0")) is ZeroElement
        with pytest.raises(DomainMismatchError):
            total_degree(7)

    def test_parse_and_format(self):
        f = P("x^2*y + 3/2")
        assert f.terms == {(2, 1): Fraction(1), (0, 0): Fraction(3, 2)}
        assert format_elem(Px("x+1")) == "x + 1"
        assert P("y^2 + y") == P("y") * P("y + 1")
        assert format_elem(P("-x + 1 - 2*y^2")) == "-2*y^2 - x + 1"
        assert format_elem(P("x - 1/2*y")) == "x - 1/2*y"
        assert format_elem(-12) == "-12"

    def test_parse_integer_domain(self):
        assert parse_elem(" 12 - -3 ", INTEGER) == 15
        assert parse_elem("2^10", INTEGER) == 1024
        with pytest.raises(ParseError):
            parse_elem("1/2", INTEGER)
        with pytest.raises(ParseError):
            parse_elem("x", INTEGER)

    @pytest.mark.parametrize("text", ["2x", "x y", "x^", "x + ", "(x", "z", "x^-1", "1/0", ""])
    def test_parse_errors(self, text):
        with pytest.raises(ParseError) as info:
            parse_elem(text, XY)
        assert info.value.position >= 0

    def test_juxtaposition_message(self):
        with pytest.raises(ParseError, match=r"\*"):
            parse_elem("2x", XY)

    def test_domain_validation(self):
        with pytest.raises(ValueError):
            Domain.poly()
        with pytest.raises(ValueError):
            Domain.poly("x", "x")
        assert str(Domain.poly("x", "y")) == "poly x y"
        assert str(INTEGER) == "integer"


def euclid_gcd(a: Poly, b: Poly) -> Poly:
    """Textbook univariate Euclid over Q, then monic."""
    while b:
        a, b = b, _urem(a, b)
    return normalize(a)


def _urem(a, b):
    db = total_degree(b)
    lb = b.terms[(db,)]
    r = a
    while r and total_degree(r) >= db:
        dr = total_degree(r)
        r = r - Poly({(dr - db,): r.terms[(dr,)] / lb}, r.vars) * b
    return r


def to_sympy(f: Poly):
    sympy = pytest.importorskip("sympy")
    return sympy.sympify(format_elem(f).replace("^", "**"))


class TestProperties:
    @given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6))
    def test_int_gcd_divides(self, a, b):
        g = gcd(a, b)
        assert g >= 0
        if g:
            assert a % g == 0 and b % g == 0

    @given(nonzero_polys(X, 4), nonzero_polys(X, 4), factored_polys(X))
    def test_univariate_oracle(self, a, b, c):
        assert gcd(a * c, b * c) == euclid_gcd(a * c, b * c)

    @settings(max_examples=60, deadline=None)
    @given(factored_polys(XY), factored_polys(XY), factored_polys(XY))
    def test_multivariate_common_divisor(self, a, b, c):
        g = gcd(a * c, b * c)
        assert divides(g, a * c) and divides(g, b * c)
        assert divides(c, g)
        assert g == normalize(g)

    @settings(max_examples=40, deadline=None)
    @given(nonzero_polys(XY, 2, 3), nonzero_polys(XY, 2, 3), factored_polys(XY, 2))
    def test_multivariate_against_sympy(self, a, b, c):
        sympy = pytest.importorskip("sympy")
        mine = to_sympy(gcd(a * c, b * c))
        ref = sympy.gcd(to_sympy(a * c), to_sympy(b * c))
        assert sympy.simplify(mine / ref).is_number

    @given(polys(XY), st.sampled_from([Fraction(-1), Fraction(3, 2), Fraction(-7, 5)]))
    def test_normalize_unit_invariant(self, a, u):
        assert normalize(a * u) == normalize(a)

    @given(polys(XY, 3), nonzero_polys(XY, 3))
    def test_exact_div_roundtrip(self, a, b):
        assert exact_div(a * b, b) == a

    @given(factored_polys(XY), factored_polys(XY))
    def test_lcm_gcd_product(self, a, b):
        assert normalize(lcm(a, b) * gcd(a, b)) == normalize(a * b)

    @given(polys(XY, 3, 5))
    def test_parse_format_roundtrip(self, a):
        assert parse_elem(format_elem(a), XY) == a

    @given(st.lists(st.integers(1, 100), min_size=1, max_size=6))
    def test_many_folds(self, xs):
        import math
        assert gcd_many(xs) == math.gcd(*xs)
        assert lcm_many(xs) == math.lcm(*xs)

    def test_many_empty(self):
        with pytest.raises(ValueError):
            gcd_many([])
        with pytest.raises(ValueError):
            lcm_many([])

    def test_poly_immutable_and_hashable(self):
        f = Px("x + 1")
        with pytest.raises(AttributeError):
            f.vars = ("y",)
        assert hash(f) == hash(Px("1 + x"))
        assert Px("3") == 3 and hash(Px("3")) == hash(3)
