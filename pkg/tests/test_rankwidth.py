"""Rank decompositions and the exact width computation."""

import pytest

from vminor.errors import GraphError, SizeLimitError
from vminor.graph import Graph
from vminor.rankwidth import (
    RankDecomposition,
    decomposition_width,
    rank_width_by_tree_enumeration,
    rank_width_exact,
)
from vminor.vertex_minor import lc_orbit

from conftest import connected_graphs, random_graph


def _path_decomposition(n):
    """Caterpillar tree: leaves 0..n-1 hang off a spine of internal nodes."""
    edges = []
    leaf_map = [(v, v) for v in range(n)]
    spine = list(range(n, n + n - 2))
    edges.append((0, spine[0]))
    for a, b in zip(spine, spine[1:]):
        edges.append((a, b))
    for i, s in enumerate(spine):
        edges.append((s, i + 1))
    edges.append((spine[-1], n - 1))
    return RankDecomposition(tuple(edges), tuple(leaf_map))


class TestDecompositionValidation:
    def test_two_leaf_tree(self):
        g = Graph.complete([0, 1])
        d = RankDecomposition(((0, 1),), ((0, 0), (1, 1)))
        d.validate(g)
        assert decomposition_width(g, d) == 1

    def test_caterpillar_accepted(self):
        g = Graph.path(range(5))
        d = _path_decomposition(5)
        d.validate(g)

    def test_disconnected_tree_rejected(self):
        g = Graph([0, 1, 2, 3], [])
        d = RankDecomposition(((0, 1), (2, 3)),
                              ((0, 0), (1, 1), (2, 2), (3, 3)))
        with pytest.raises(GraphError, match="connected|nodes - 1"):
            d.validate(g)

    def test_cycle_rejected(self):
        g = Graph([0, 1, 2], [])
        d = RankDecomposition(((0, 1), (1, 2), (2, 0)),
                              ((0, 0), (1, 1), (2, 2)))
        with pytest.raises(GraphError):
            d.validate(g)

    def test_degree_four_rejected(self):
        g = Graph([0, 1, 2, 3], [])
        star = RankDecomposition(((4, 0), (4, 1), (4, 2), (4, 3)),
                                 ((0, 0), (1, 1), (2, 2), (3, 3)))
        with pytest.raises(GraphError, match="degree"):
            star.validate(g)

    def test_leaf_map_must_cover_vertices(self):
        g = Graph([0, 1, 2], [])
        d = RankDecomposition(((0, 1),), ((0, 0), (1, 1)))
        with pytest.raises(GraphError):
            d.validate(g)

    def test_leaf_map_must_hit_leaves(self):
        g = Graph([0, 1], [])
        # node 2 is internal in a path of three nodes
        d = RankDecomposition(((0, 2), (2, 1)), ((0, 0), (1, 2)))
        with pytest.raises(GraphError):
            d.validate(g)

    def test_duplicate_vertex_rejected(self):
        g = Graph([0, 1], [])
        d = RankDecomposition(((0, 1),), ((0, 0), (0, 1)))
        with pytest.raises(GraphError):
            d.validate(g)

    def test_repeated_edge_rejected(self):
        g = Graph([0, 1], [])
        d = RankDecomposition(((0, 1), (1, 0)), ((0, 0), (1, 1)))
        with pytest.raises(GraphError):
            d.validate(g)


class TestKnownWidths:
    def test_single_vertex(self):
        w, d = rank_width_exact(Graph([5], []))
        assert w == 0
        assert d is None

    def test_empty_graph(self):
        w, d = rank_width_exact(Graph([], []))
        assert w == 0
        assert d is None

    def test_edgeless(self):
        for n in (2, 4, 6):
            w, _ = rank_width_exact(Graph(range(n), []))
            assert w == 0

    def test_complete_graphs(self):
        for n in range(2, 9):
            w, d = rank_width_exact(Graph.complete(range(n)))
            assert w == 1, n
            assert d is not None

    def test_paths(self):
        for n in range(2, 9):
            w, _ = rank_width_exact(Graph.path(range(n)))
            assert w == 1, n

    def test_stars(self):
        for n in range(3, 8):
            w, _ = rank_width_exact(Graph.star(0, range(1, n)))
            assert w == 1, n

    def test_cycles(self):
        assert rank_width_exact(Graph.cycle(range(3)))[0] == 1
        assert rank_width_exact(Graph.cycle(range(4)))[0] == 1
        for n in range(5, 9):
            w, _ = rank_width_exact(Graph.cycle(range(n)))
            assert w == 2, n

    def test_width_zero_iff_edgeless_on_two_plus(self):
        g = Graph([0, 1, 2], [(0, 1)])
        assert rank_width_exact(g)[0] == 1


class TestWitness:
    def test_witness_achieves_the_width(self, rng):
        for _ in range(12):
            n = rng.randrange(2, 8)
            g = random_graph(rng, range(n), 0.5)
            w, d = rank_width_exact(g)
            assert d is not None
            d.validate(g)
            assert decomposition_width(g, d) == w

    def test_no_decomposition_beats_the_width(self):
        # tree enumeration is the independent check; agreement tested below
        g = Graph.cycle(range(5))
        w, d = rank_width_exact(g)
        assert decomposition_width(g, d) == w == 2


class TestAgainstTreeEnumeration:
    def test_exhaustive_small(self):
        for labels in ([0, 1], [0, 1, 2], [0, 1, 2, 3]):
            for g in connected_graphs(labels):
                dp, _ = rank_width_exact(g)
                assert dp == rank_width_by_tree_enumeration(g), g.edges

    def test_sampled_n5(self, rng):
        seen = 0
        while seen < 12:
            g = random_graph(rng, range(5), 0.5)
            seen += 1
            dp, _ = rank_width_exact(g)
            assert dp == rank_width_by_tree_enumeration(g), g.edges

    def test_enumeration_cap(self):
        with pytest.raises(SizeLimitError):
            rank_width_by_tree_enumeration(Graph.path(range(7)))


class TestInvariance:
    def test_lc_invariant(self, rng):
        # cut ranks are preserved by local complementation
        for _ in range(4):
            g = random_graph(rng, range(6), 0.5)
            w, _ = rank_width_exact(g)
            for m in lc_orbit(g)[:8]:
                assert rank_width_exact(m)[0] == w

    def test_vertex_deletion_monotone(self, rng):
        for _ in range(6):
            g = random_graph(rng, range(7), 0.5)
            w, _ = rank_width_exact(g)
            for v in (0, 3):
                assert rank_width_exact(g.delete_vertex(v))[0] <= w


def test_size_cap():
    with pytest.raises(SizeLimitError):
        rank_width_exact(Graph.path(range(13)))
    assert rank_width_exact(Graph.path(range(13)), limit=13)[0] == 1
