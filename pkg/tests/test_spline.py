import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gsplines.graph import Permutation, cycle_graph, diamond_graph, path_graph, reorder_graph
from gsplines.ring import Domain, ZeroElement, parse_elem
from gsplines.spline import (
    constant_spline,
    is_flow_up,
    is_spline,
    permute_spline,
    spline_combine,
    spline_degree,
    trivial_flow_up,
)

from helpers import XY, random_permutation, random_spline


def P(s):
    return parse_elem(s, XY)


def edge6():
    return path_graph([6])


class TestExamples:
    def test_is_spline(self):
        assert is_spline(edge6(), (2, 14))
        report = is_spline(edge6(), (0, 4))
        assert not report and report.failures == [(1, -4)]
        assert is_spline(cycle_graph([2, 4, 6]), (5, 5, 5))

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            is_spline(edge6(), (1, 2, 3))

    def test_is_flow_up(self):
        assert is_flow_up((0, 10, 0, 0), 2)
        assert is_flow_up((1, 1, 1, 1), 1)
        assert not is_flow_up((0, 10, 0, 0), 3)
        with pytest.raises(IndexError):
            is_flow_up((0, 1), 3)

    def test_trivial_flow_up(self):
        assert trivial_flow_up(cycle_graph([2, 4, 6]), 2) == (0, 48, 0)
        assert trivial_flow_up(path_graph([4, 6]), 3) == (0, 0, 24)
        with pytest.raises(IndexError):
            trivial_flow_up(path_graph([4, 6]), 1)
        assert constant_spline(path_graph([4, 6])) == (1, 1, 1)

    def test_permute(self):
        F5 = Domain.poly("f1", "f2", "f3", "f4", "f5")
        F = tuple(F5.var(v) for v in F5.variables)
        s = Permutation((3, 4, 5, 1, 2))
        assert permute_spline(F, s) == tuple(F5.var(v) for v in ("f3", "f4", "f5", "f1", "f2"))
        assert permute_spline(F, Permutation.identity(5)) == F
        assert permute_spline(permute_spline(F, s), s.inverse()) == F

    def test_combine(self):
        F = (P("x"), P("x"), P("x*y + x"), P("x"))
        combo = spline_combine(
            [P("x"), P("y"), P("-x")],
            [tuple(map(P, ["1", "1", "1", "1"])), tuple(map(P, ["0", "0", "x", "x*y + x"])),
             tuple(map(P, ["0", "0", "0", "y^2 + y"]))])
        assert combo == F
        assert spline_combine([1], [(2, 14)]) == (2, 14)
        assert spline_combine([0, 0], [(1, 2), (3, 4)]) == (0, 0)
        with pytest.raises(ValueError):
            spline_combine([1, 2], [(1, 2)])

    def test_degree(self):
        assert spline_degree((P("x"), P("x"), P("x*y + x"), P("x"))) == 2
        assert spline_degree(tuple(map(P, ["1"] * 4))) == 0
        assert spline_degree(tuple(map(P, ["0"] * 4))) is ZeroElement
        with pytest.raises(TypeError):
            spline_degree((1, 2))


class TestProperties:
    @settings(max_examples=50, deadline=None)
    @given(st.integers(0, 10**6))
    def test_module_closure(self, seed):
        rng = random.Random(seed)
        g = diamond_graph([rng.randint(1, 20) for _ in range(6)], 4, 3)
        coeff = lambda: rng.randint(-5, 5)  # noqa: E731
        F, G = random_spline(rng, g, coeff), random_spline(rng, g, coeff)
        assert is_spline(g, F) and is_spline(g, G)
        assert is_spline(g, spline_combine([coeff(), coeff()], [F, G]))

    @settings(max_examples=50, deadline=None)
    @given(st.integers(0, 10**6))
    def test_transport(self, seed):
        rng = random.Random(seed)
        g = cycle_graph([rng.randint(1, 12) for _ in range(rng.randint(3, 6))])
        s = random_permutation(rng, g.n)
        h = reorder_graph(g, s)
        F = random_spline(rng, g, lambda: rng.randint(-3, 3))
        assert is_spline(h, permute_spline(F, s))
        junk = tuple(rng.randint(-20, 20) for _ in range(g.n))
        assert bool(is_spline(g, junk)) == bool(is_spline(h, permute_spline(junk, s)))

    @given(st.lists(st.integers(1, 30), min_size=3, max_size=7), st.data())
    def test_trivial_flow_up_always_valid(self, labels, data):
        g = cycle_graph(labels)
        i = data.draw(st.integers(2, g.n))
        F = trivial_flow_up(g, i)
        assert is_spline(g, F) and is_flow_up(F, i)
