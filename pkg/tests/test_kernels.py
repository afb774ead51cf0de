"""Tests for the Buss, crown and rigid-crown kernels."""

import pytest

from graphs.graph import Graph, is_vertex_cover
from kernels.buss import buss_kernel
from kernels.crown import crown_kernel, exhaustive_crown_kernel
from kernels.rigid import rigid_crown, rigid_crown_kernel
from tests.oracles import (
    all_covers,
    graph_corpus,
    members,
    min_cover_size,
    minimum_covers,
    smallest_cover_avoiding,
)


class TestBussKernel:
    """Test the Buss kernel."""

    def test_star(self, star5):
        """Test the center of K_{1,5} is forced for k=2."""
        result = buss_kernel(star5, 2)
        assert result.forced.to_list() == [0]
        assert result.indifferent.to_list() == [1, 2, 3, 4, 5]
        assert result.residual.n == 0
        assert not result.infeasible
        assert result.budget == 1

    def test_cycle_untouched(self, c4):
        """Test no C4 vertex exceeds the budget."""
        result = buss_kernel(c4, 2)
        assert not result.forced
        assert not result.indifferent
        assert result.residual.n == 4
        assert not result.infeasible

    def test_edgeless(self, edgeless):
        """Test every vertex of an edgeless graph is indifferent."""
        result = buss_kernel(edgeless, 3)
        assert result.indifferent == edgeless.vertices()
        assert result.residual.n == 0

    def test_too_many_edges(self, k4):
        """Test K4 with k=1 keeps more than k'^2 edges."""
        assert buss_kernel(k4, 1).infeasible

    def test_negative_budget(self, path3):
        """Test a negative budget is rejected."""
        with pytest.raises(ValueError):
            buss_kernel(path3, -1)

    def test_partition_properties(self):
        """Test loss-lessness and size bounds on a seeded corpus."""
        for g in graph_corpus(80, n_range=(3, 10)):
            covers = all_covers(g)
            for k in range(g.n + 1):
                result = buss_kernel(g, k)
                assert result.parts_are_disjoint()
                small = [c for c in covers if c.bit_count() <= k]
                if result.infeasible:
                    assert not small
                    continue
                budget = result.budget
                assert result.residual.m <= budget * budget
                assert result.residual.n <= 2 * budget * budget
                for cover in small:
                    assert cover & result.forced.bits == result.forced.bits
                    trimmed = cover & ~result.indifferent.bits
                    assert is_vertex_cover(g, g.vertex_set(members(trimmed)))


class TestCrownKernel:
    """Test single crowns and the exhaustive crown kernel."""

    def test_star(self, star3):
        """Test K_{1,3} with k=1 yields a crown headed by the center."""
        crown, infeasible = crown_kernel(star3, 1)
        assert not infeasible
        assert crown.head.to_list() == [0]
        assert crown.crown.to_list() == [2, 3]
        assert crown.rest.to_list() == [1]
        assert crown.is_valid(star3)

    def test_path_has_no_crown(self, path3):
        """Test the path saturates its outsiders."""
        crown, infeasible = crown_kernel(path3, 1)
        assert crown is None
        assert not infeasible

    def test_single_edge_zero_budget(self, single_edge):
        """Test one edge cannot be covered with budget 0."""
        crown, infeasible = crown_kernel(single_edge, 0)
        assert crown is None
        assert infeasible

    def test_found_crowns_are_valid(self):
        """Test every crown found on the corpus meets the crown conditions."""
        for g in graph_corpus(150, n_range=(3, 14)):
            crown, infeasible = crown_kernel(g, g.n)
            assert not infeasible
            if crown is not None:
                assert crown.is_valid(g)
                assert len(crown.matching) == len(crown.head)

    def test_exhaustive_properties(self):
        """Test the reduction keeps the optimum and the 3k bound."""
        for g in graph_corpus(120, n_range=(3, 13)):
            optimum = min_cover_size(g)
            for k in (optimum - 1, optimum, optimum + 2):
                if k < 0:
                    continue
                reduction = exhaustive_crown_kernel(g, k)
                if reduction.infeasible:
                    assert optimum > k
                    continue
                residual_optimum = min_cover_size(reduction.residual.graph)
                assert len(reduction.cover) + residual_optimum == optimum
                assert reduction.cover.isdisjoint(reduction.discarded)
                if optimum <= k:
                    assert reduction.residual.n <= 3 * k
                rest = reduction.residual.lift(reduction.residual.graph.vertices())
                assert is_vertex_cover(g, reduction.cover | rest)

    def test_exhaustive_on_edgeless(self, edgeless):
        """Test isolated vertices are discarded up front."""
        reduction = exhaustive_crown_kernel(edgeless, 0)
        assert reduction.discarded == edgeless.vertices()
        assert reduction.residual.n == 0
        assert not reduction.infeasible


class TestRigidCrownKernel:
    """Test the rigid-crown kernel."""

    def test_path(self, path3):
        """Test the path collapses to its center."""
        result = rigid_crown_kernel(path3)
        assert result.forced.to_list() == [1]
        assert result.restricted.to_list() == [0, 2]
        assert result.residual.n == 0

    def test_single_edge(self, single_edge):
        """Test a perfect matching leaves nothing rigid."""
        result = rigid_crown_kernel(single_edge)
        assert not result.forced and not result.restricted
        assert result.residual.n == 2

    def test_cycle(self, c4):
        """Test C4 has two disjoint optima and no rigid crown."""
        result = rigid_crown_kernel(c4)
        assert not result.forced and not result.restricted
        assert result.residual.n == 4

    def test_star(self, star3):
        """Test K_{1,3} pins the center and drops the leaves."""
        result = rigid_crown_kernel(star3)
        assert result.forced.to_list() == [0]
        assert result.restricted.to_list() == [1, 2, 3]

    def test_isolated_vertex_is_restricted(self):
        """Test an isolated vertex is its own rigid crown body."""
        result = rigid_crown_kernel(Graph(3, [(0, 1)]))
        assert result.restricted.to_list() == [2]
        assert result.residual.to_parent == (0, 1)

    def test_zero_loss_on_corpus(self):
        """Test F is in every and R in no minimum cover, at a fixpoint."""
        for g in graph_corpus(150, n_range=(2, 13)):
            result = rigid_crown_kernel(g)
            assert result.parts_are_disjoint()
            assert not result.indifferent
            for cover in minimum_covers(g):
                assert cover & result.forced.bits == result.forced.bits
                assert cover & result.restricted.bits == 0
            optimum = min_cover_size(g)
            assert len(result.forced) + min_cover_size(result.residual.graph) == optimum
            assert result.residual.n <= 2 * optimum
            assert not rigid_crown(result.residual.graph)



@pytest.mark.slow
class TestKernelsOnFullCorpus:
    """Exact kernel guarantees on 200 graphs with 4 to 16 vertices."""

    def test_buss_forced_in_every_small_cover(self):
        """Test no cover of size at most k avoids a Buss-forced vertex."""
        for g in graph_corpus(200, n_range=(4, 16)):
            avoiding = smallest_cover_avoiding(g)
            optimum = min_cover_size(g)
            for k in range(g.n + 1):
                result = buss_kernel(g, k)
                if result.infeasible:
                    assert optimum > k
                    continue
                assert all(avoiding[v] > k for v in result.forced)
                assert result.residual.m <= result.budget * result.budget
                assert result.residual.n <= 2 * result.budget * result.budget

    def test_crown_residual_bound(self):
        """Test exhaustive crown removal keeps the optimum within 3k vertices."""
        for g in graph_corpus(200, n_range=(4, 16)):
            optimum = min_cover_size(g)
            for k in (optimum, optimum + 1):
                reduction = exhaustive_crown_kernel(g, k)
                assert not reduction.infeasible
                assert reduction.residual.n <= 3 * k
                residual_optimum = min_cover_size(reduction.residual.graph)
                assert len(reduction.cover) + residual_optimum == optimum

    def test_rigid_zero_loss(self):
        """Test F is in every and R in no minimum cover."""
        for g in graph_corpus(200, n_range=(4, 16)):
            result = rigid_crown_kernel(g)
            covers = minimum_covers(g)
            for cover in covers:
                assert cover & result.forced.bits == result.forced.bits
                assert cover & result.restricted.bits == 0
            optimum = covers[0].bit_count()
            assert result.residual.n <= 2 * optimum
            assert len(result.forced) + min_cover_size(result.residual.graph) == optimum
