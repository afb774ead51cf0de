"""Tests for graphs, vertex sets and induced subgraphs."""

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from graphs.graph import (
    Graph,
    SubgraphView,
    VertexSet,
    induced_subgraph,
    is_vertex_cover,
)
from tests.oracles import graphs


class TestVertexSet:
    """Test the bitset-backed vertex set."""

    def test_cardinality_matches_members(self):
        """Test cardinality is the number of members."""
        s = VertexSet(8, [1, 3, 3, 7])
        assert len(s) == 3
        assert s.cardinality == 3
        assert s.to_list() == [1, 3, 7]

    def test_set_algebra(self):
        """Test union, intersection, difference and inclusion."""
        a = VertexSet(6, [0, 1, 2])
        b = VertexSet(6, [2, 3])
        assert (a | b).to_list() == [0, 1, 2, 3]
        assert (a & b).to_list() == [2]
        assert (a - b).to_list() == [0, 1]
        assert VertexSet(6, [1]) <= a
        assert not b <= a
        assert a.complement().to_list() == [3, 4, 5]

    def test_out_of_range_rejected(self):
        """Test members must lie in the universe."""
        with pytest.raises(ValueError):
            VertexSet(3, [3])

    def test_universe_mismatch_rejected(self):
        """Test sets over different universes cannot be combined."""
        with pytest.raises(ValueError):
            VertexSet(3, [0]) | VertexSet(4, [0])

    @given(st.lists(st.integers(0, 30), max_size=20))
    def test_cardinality_is_popcount(self, items):
        """Test the cached size equals the popcount of the bits."""
        s = VertexSet(31, items)
        assert len(s) == s.bits.bit_count() == len(set(items))


class TestGraph:
    """Test graph construction and neighborhoods."""

    def test_adjacency_sorted_and_symmetric(self):
        """Test adjacency lists are sorted and symmetric."""
        g = Graph(4, [(2, 0), (0, 1), (3, 0)])
        assert g.adjacency[0] == (1, 2, 3)
        assert all(0 in g.adjacency[v] for v in (1, 2, 3))
        assert g.m == 3

    def test_self_loop_rejected(self):
        """Test self-loops are not allowed."""
        with pytest.raises(ValueError):
            Graph(2, [(1, 1)])

    def test_duplicate_edges_collapse(self):
        """Test repeated edges are stored once."""
        assert Graph(2, [(0, 1), (1, 0)]).m == 1

    def test_neighborhoods(self, path4):
        """Test N(W) and N+(v)."""
        assert path4.neighborhood(path4.vertex_set([0, 3])).to_list() == [1, 2]
        assert path4.closed_neighborhood(1).to_list() == [0, 1, 2]

    def test_networkx_round_trip(self, c4):
        """Test conversion to and from networkx keeps the edges."""
        back = Graph.from_networkx(c4.to_networkx())
        assert list(back.edges()) == list(c4.edges())
        assert nx.is_isomorphic(c4.to_networkx(), nx.cycle_graph(4))

    @given(graphs(max_n=12), st.data())
    def test_neighborhood_size_bounded_by_degree_sum(self, g, data):
        """Test |N(W)| <= sum of degrees over W."""
        members = data.draw(st.lists(st.integers(0, max(g.n - 1, 0)), max_size=g.n)) if g.n else []
        w = g.vertex_set(members)
        assert len(g.neighborhood(w)) <= sum(g.degree(v) for v in w)

    @given(graphs(max_n=12))
    def test_half_degree_sum_is_edge_count(self, g):
        """Test m equals half the sum of adjacency lengths."""
        assert 2 * g.m == sum(len(a) for a in g.adjacency)


class TestInducedSubgraph:
    """Test induced subgraph views."""

    def test_triangle_pair_is_single_edge(self, triangle):
        """Test the view on two triangle vertices keeps one edge."""
        view = induced_subgraph(triangle, triangle.vertex_set([0, 1]))
        assert view.n == 2
        assert view.m == 1

    def test_full_selection_is_a_copy(self, petersen_text):
        """Test selecting every vertex gives the same edges."""
        from graphs.io import parse_dimacs

        g = parse_dimacs(petersen_text).graph
        view = induced_subgraph(g, g.vertices())
        assert list(view.graph.edges()) == list(g.edges())

    def test_path_endpoints_are_isolated(self, path3):
        """Test the endpoints of a path induce no edge."""
        view = induced_subgraph(path3, path3.vertex_set([0, 2]))
        assert view.n == 2
        assert view.m == 0

    def test_maps_are_inverse(self, c4):
        """Test lift and restrict compose to the identity on the selection."""
        selected = c4.vertex_set([1, 3])
        view = SubgraphView(c4, selected)
        assert view.to_parent == (1, 3)
        assert all(view.to_parent[view.to_local[v]] == v for v in selected)
        assert view.lift(view.restrict(selected)) == selected


class TestIsVertexCover:
    """Test the vertex cover check."""

    def test_path_center(self, path3):
        """Test the middle of a path covers it."""
        assert is_vertex_cover(path3, path3.vertex_set([1]))

    def test_triangle_single_vertex(self, triangle):
        """Test one triangle vertex leaves an edge uncovered."""
        assert not is_vertex_cover(triangle, triangle.vertex_set([0]))

    def test_edgeless_empty_cover(self, edgeless):
        """Test the empty set covers an edgeless graph."""
        assert is_vertex_cover(edgeless, edgeless.empty_set())

    @given(graphs(max_n=10))
    def test_full_and_empty(self, g):
        """Test V always covers and the empty set covers iff m = 0."""
        assert is_vertex_cover(g, g.vertices())
        assert is_vertex_cover(g, g.empty_set()) == (g.m == 0)
