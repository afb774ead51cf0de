"""Tests for the clique-cover bound, branch & bound and the brute-force oracle."""

import pytest

from graphs.graph import Graph, is_vertex_cover, path_graph
from solver.search import (
    branch_and_bound_vc,
    brute_force_min_vc,
    clique_cover,
    clique_cover_bound,
    greedy_cover,
    lower_bound,
    trivial_bound,
)
from tests.oracles import graph_corpus, min_cover_size


class TestCliqueCover:
    """Test the greedy clique cover and its bound."""

    def test_triangle(self, triangle):
        """Test a triangle is one clique."""
        cover = clique_cover(triangle)
        assert len(cover) == 1
        assert cover.cliques[0].to_list() == [0, 1, 2]

    def test_edgeless(self, edgeless):
        """Test an edgeless graph gives singletons."""
        assert len(clique_cover(edgeless)) == edgeless.n

    def test_path(self, path3):
        """Test the path splits as {b, a} and {c}."""
        cover = clique_cover(path3)
        assert [c.to_list() for c in cover.cliques] == [[0, 1], [2]]

    def test_cliques_partition_vertices(self):
        """Test the cliques are disjoint cliques covering V."""
        for g in graph_corpus(80):
            seen = g.empty_set()
            for clique in clique_cover(g).cliques:
                assert seen.isdisjoint(clique)
                seen = seen | clique
                members = clique.to_list()
                assert all(g.has_edge(u, v) for u in members for v in members if u < v)
            assert seen == g.vertices()

    def test_lower_bound_examples(self, triangle, edgeless, path3):
        """Test the bound on the worked examples."""
        assert lower_bound(triangle) == 2
        assert lower_bound(edgeless) == 0
        assert lower_bound(path3) == 1

    def test_bound_is_valid(self):
        """Test the bound never exceeds the optimum."""
        for g in graph_corpus(150):
            assert lower_bound(g) <= min_cover_size(g)

    def test_bound_on_subsets(self, k4):
        """Test the residual form works on a subset of vertices."""
        assert clique_cover_bound(k4, 0b0111) == 2
        assert trivial_bound(k4, k4.full_mask) == 0


class TestBranchAndBound:
    """Test the exact branch & bound."""

    def test_path(self, path3):
        """Test the path center is found and proved optimal."""
        outcome = branch_and_bound_vc(path3)
        assert outcome.cover.to_list() == [1]
        assert outcome.optimal

    def test_k4(self, k4):
        """Test K4 needs three vertices."""
        outcome = branch_and_bound_vc(k4)
        assert outcome.size == 3
        assert outcome.optimal

    def test_zero_budget(self):
        """Test no budget returns the greedy cover unproved."""
        g = path_graph(4)
        outcome = branch_and_bound_vc(g, node_limit=0)
        assert outcome.size == 4
        assert not outcome.optimal
        assert outcome.nodes_explored == 0

    def test_triangle_closed_at_root(self, triangle):
        """Test the bound matches the greedy cover without branching."""
        outcome = branch_and_bound_vc(triangle, node_limit=0)
        assert outcome.size == 2
        assert outcome.optimal
        assert outcome.lower_bound_at_root == 2

    def test_edgeless(self, edgeless):
        """Test the empty cover is optimal."""
        outcome = branch_and_bound_vc(edgeless)
        assert outcome.size == 0
        assert outcome.optimal

    def test_against_oracle(self):
        """Test optimal sizes on a seeded corpus."""
        for g in graph_corpus(200):
            outcome = branch_and_bound_vc(g)
            assert outcome.optimal
            assert is_vertex_cover(g, outcome.cover)
            assert outcome.size == min_cover_size(g)
            assert outcome.lower_bound_at_root <= outcome.size

    def test_budget_keeps_a_cover(self):
        """Test a truncated search still returns a valid cover."""
        for g in graph_corpus(60, n_range=(10, 16)):
            outcome = branch_and_bound_vc(g, node_limit=3)
            assert is_vertex_cover(g, outcome.cover)
            assert outcome.nodes_explored <= 3
            assert outcome.size <= len(greedy_cover(g))

    def test_stops_below_upper_bound(self):
        """Test the search stops once a cover beats the target."""
        for g in graph_corpus(60):
            optimum = min_cover_size(g)
            outcome = branch_and_bound_vc(g, upper_bound=optimum + 1)
            assert outcome.size <= optimum
            assert is_vertex_cover(g, outcome.cover)

    def test_stronger_bound_explores_no_more(self):
        """Test the clique bound never needs more nodes than no bound."""
        for g in graph_corpus(60):
            strong = branch_and_bound_vc(g)
            weak = branch_and_bound_vc(g, bound=trivial_bound)
            assert strong.size == weak.size
            assert strong.nodes_explored <= weak.nodes_explored


class TestBruteForce:
    """Test the enumeration oracle."""

    def test_cycle(self, c4):
        """Test C4 takes the lexicographically first optimum."""
        assert brute_force_min_vc(c4).to_list() == [0, 2]

    def test_triangle(self, triangle):
        """Test the triangle."""
        assert brute_force_min_vc(triangle).to_list() == [0, 1]

    def test_edgeless(self, edgeless):
        """Test the empty cover."""
        assert not brute_force_min_vc(edgeless)

    def test_too_large(self):
        """Test the size cap."""
        with pytest.raises(ValueError):
            brute_force_min_vc(Graph(25))

    def test_matches_subset_oracle(self):
        """Test against the independent-set oracle."""
        for g in graph_corpus(40, n_range=(3, 11)):
            cover = brute_force_min_vc(g)
            assert is_vertex_cover(g, cover)
            assert len(cover) == min_cover_size(g)
