import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gsplines.graph import (
    BadVertexIndex,
    Disconnected,
    DuplicateEdge,
    EdgeLabeledGraph,
    Permutation,
    SelfLoop,
    ZeroLabel,
    block_decompose,
    classify_graph,
    cut_vertices,
    cycle_graph,
    diamond_graph,
    family_labels,
    path_graph,
    reorder_graph,
    tree_graph,
)

from helpers import join_at_vertex, random_permutation, shuffled


def tri():
    return cycle_graph([2, 4, 6])


class TestValidation:
    def test_ok(self):
        assert EdgeLabeledGraph.build(3, [(1, 2, 2), (2, 3, 4), (3, 1, 6)]) == tri()

    @pytest.mark.parametrize("n, edges, exc", [
        (2, [(1, 1, 5), (1, 2, 1)], SelfLoop),
        (4, [(1, 2, 1), (3, 4, 1)], Disconnected),
        (2, [(1, 2, 1), (2, 1, 3)], DuplicateEdge),
        (2, [(1, 2, 0)], ZeroLabel),
        (2, [(1, 3, 1)], BadVertexIndex),
    ])
    def test_errors(self, n, edges, exc):
        with pytest.raises(exc):
            EdgeLabeledGraph.build(n, edges)

    def test_error_names_edge(self):
        with pytest.raises(SelfLoop, match="edge 2"):
            EdgeLabeledGraph.build(2, [(1, 2, 1), (2, 2, 3)])


class TestPermutation:
    def test_cycles(self):
        s = Permutation.from_cycles(5, [(1, 3, 5, 2, 4)])
        assert s.image == (3, 4, 5, 1, 2)
        assert s.inverse().then(s).is_identity()

    def test_rejects_non_bijection(self):
        with pytest.raises(ValueError):
            Permutation((1, 1, 2))

    def test_reorder_identity_and_inverse(self):
        g = diamond_graph([2, 6, 4, 10, 4], 3, 3)
        assert reorder_graph(g, Permutation.identity(4)) == g
        s = Permutation((2, 4, 1, 3))
        assert reorder_graph(reorder_graph(g, s), s.inverse()) == g

    def test_reorder_transports_vertices(self):
        g = path_graph([7, 11, 13, 17])
        s = Permutation((3, 4, 5, 1, 2))
        h = reorder_graph(g, s)
        # new vertex i is old vertex s(i): old edge {1,2} label 7 sits on {4,5}
        assert h.label_of(4, 5) == 7
        assert h.label_of(1, 2) == 13

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            reorder_graph(tri(), Permutation.identity(4))


class TestBlocks:
    def test_two_triangles(self):
        g = join_at_vertex(tri(), 1, tri(), 2)
        blocks = block_decompose(g)
        assert [len(b.vertices) for b in blocks] == [3, 3]
        assert cut_vertices(g) == {1}

    def test_tree_blocks_are_edges(self):
        g = tree_graph([1, 1, 2], [2, 3, 5])
        assert len(block_decompose(g)) == 3

    def test_cycle_one_block(self):
        assert len(block_decompose(cycle_graph([1, 2, 3, 4]))) == 1

    @settings(max_examples=30, deadline=None)
    @given(st.integers(0, 10**6))
    def test_blocks_cover_edges_once(self, seed):
        rng = random.Random(seed)
        g = join_at_vertex(cycle_graph([2, 3, 5, 7]), rng.randint(1, 4),
                           diamond_graph([1, 2, 3, 4, 5], 3, 3), rng.randint(1, 4))
        g = join_at_vertex(g, rng.randint(1, g.n), tree_graph([1], [9]), 1)
        g = shuffled(rng, g)
        blocks = block_decompose(g)
        idx = sorted(i for b in blocks for i in b.edge_indices)
        assert idx == list(range(len(g.edges)))
        shared = {v for b in blocks for v in b.vertices
                  if sum(v in c.vertices for c in blocks) > 1}
        assert shared == cut_vertices(g)


class TestClassify:
    def test_examples(self):
        assert classify_graph(tri()).describe() == "cycle(3)"
        assert classify_graph(path_graph([1, 1])).kind == "tree"
        g = EdgeLabeledGraph.build(4, [(1, 2, 1), (2, 3, 1), (3, 1, 1), (2, 4, 1), (4, 1, 1)])
        c = classify_graph(g)
        assert c.describe() == "diamond(3,3)" and c.relabel.is_identity()

    def test_joined_and_other(self):
        g = join_at_vertex(tri(), 1, tri(), 2)
        assert classify_graph(g).describe() == "joined[cycle(3), cycle(3)]"
        k4 = EdgeLabeledGraph.build(4, [(a, b, 1) for a in range(1, 5) for b in range(a + 1, 5)])
        assert classify_graph(k4).kind == "other"

    def test_dmn_parameters(self):
        assert classify_graph(diamond_graph(list(range(1, 7)), 4, 3)).params == (4, 3)
        assert classify_graph(diamond_graph(list(range(1, 10)), 5, 5)).params == (5, 5)

    @settings(max_examples=60, deadline=None)
    @given(st.integers(0, 10**6), st.sampled_from(["cycle", "diamond", "tree"]))
    def test_relabel_recovers_labels(self, seed, kind):
        rng = random.Random(seed)
        if kind == "cycle":
            n = rng.randint(3, 8)
            g = cycle_graph(rng.sample(range(1, 100), n))
        elif kind == "diamond":
            m, n = rng.randint(3, 6), rng.randint(3, 6)
            g = diamond_graph(rng.sample(range(1, 100), m + n - 1), m, n)
        else:
            n = rng.randint(2, 8)
            g = tree_graph([rng.randint(1, i + 1) for i in range(n - 1)], rng.sample(range(1, 100), n - 1))
        cls = classify_graph(g)
        h = shuffled(rng, g)
        cls_h = classify_graph(h)
        assert cls_h.kind == cls.kind
        if kind == "cycle":
            # a cycle's labels are determined up to rotation and reflection
            a, b = family_labels(g), family_labels(h)
            rots = [a[i:] + a[:i] for i in range(len(a))]
            assert b in rots or b[::-1] in rots
        elif kind == "diamond":
            if cls.params[0] != cls.params[1]:
                assert sorted(cls_h.params) == sorted(cls.params)
            assert family_labels(h)[0] == family_labels(g)[0]
            assert sorted(family_labels(h)) == sorted(family_labels(g))
        else:
            assert sorted(family_labels(h)) == sorted(g.labels)
        # canonical relabeling is idempotent
        canon = reorder_graph(h, cls_h.relabel)
        assert classify_graph(canon).relabel.is_identity()

    @settings(max_examples=30, deadline=None)
    @given(st.integers(0, 10**6))
    def test_reorder_preserves_class(self, seed):
        rng = random.Random(seed)
        g = diamond_graph([rng.randint(1, 9) for _ in range(6)], 3, 4)
        h = reorder_graph(g, random_permutation(rng, g.n))
        assert classify_graph(h).kind == "diamond"
