"""Undirected simple graphs, dense vertex sets and induced subgraph views."""

from __future__ import annotations

from typing import Iterable, Iterator, List, Sequence, Tuple


def iter_bits(bits: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``bits`` in ascending order."""
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


class VertexSet:
    """Immutable set of vertices over ``0..n-1`` backed by an integer bitset.

    Every subset used by the kernels and propagators (S, W, I, H, F, R, J)
    is a VertexSet. Set operators return new instances; mixing sets over
    different universes is an error.
    """

    __slots__ = ("n", "bits", "_size")

    def __init__(self, n: int, members: Iterable[int] = ()):
        bits = 0
        for v in members:
            if not 0 <= v < n:
                raise ValueError(f"vertex {v} outside universe of size {n}")
            bits |= 1 << v
        self.n = n
        self.bits = bits
        self._size = bits.bit_count()

    @classmethod
    def from_bits(cls, n: int, bits: int) -> VertexSet:
        """Build a set from a raw bitmask (bits beyond ``n`` are dropped)."""
        instance = cls.__new__(cls)
        instance.n = n
        instance.bits = bits & ((1 << n) - 1)
        instance._size = instance.bits.bit_count()
        return instance

    @classmethod
    def empty(cls, n: int) -> VertexSet:
        return cls.from_bits(n, 0)

    @classmethod
    def full(cls, n: int) -> VertexSet:
        return cls.from_bits(n, (1 << n) - 1)

    @property
    def cardinality(self) -> int:
        return self._size

    def __len__(self) -> int:
        return self._size

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.bits)

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and 0 <= v < self.n and bool(self.bits >> v & 1)

    def __bool__(self) -> bool:
        return self.bits != 0

    def _check(self, other: VertexSet) -> None:
        if not isinstance(other, VertexSet):
            raise TypeError(f"expected VertexSet, got {type(other).__name__}")
        if other.n != self.n:
            raise ValueError(f"universe mismatch: {self.n} vs {other.n}")

    def __or__(self, other: VertexSet) -> VertexSet:
        self._check(other)
        return VertexSet.from_bits(self.n, self.bits | other.bits)

    def __and__(self, other: VertexSet) -> VertexSet:
        self._check(other)
        return VertexSet.from_bits(self.n, self.bits & other.bits)

    def __sub__(self, other: VertexSet) -> VertexSet:
        self._check(other)
        return VertexSet.from_bits(self.n, self.bits & ~other.bits)

    def __le__(self, other: VertexSet) -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    def __ge__(self, other: VertexSet) -> bool:
        return other <= self

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VertexSet):
            return NotImplemented
        return self.n == other.n and self.bits == other.bits

    def __hash__(self) -> int:
        return hash((self.n, self.bits))

    def complement(self) -> VertexSet:
        return VertexSet.from_bits(self.n, ~self.bits)

    def isdisjoint(self, other: VertexSet) -> bool:
        self._check(other)
        return self.bits & other.bits == 0

    def to_list(self) -> List[int]:
        return list(iter_bits(self.bits))

    def __repr__(self) -> str:
        return f"VertexSet(n={self.n}, {self.to_list()})"


class Graph:
    """Immutable undirected simple graph on vertices ``0..n-1``.

    Adjacency lists are sorted ascending so every traversal in the toolkit is
    deterministic. A bitmask per vertex mirrors the lists for set algebra.
    """

    def __init__(self, n: int, edges: Iterable[Tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        masks = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop on vertex {u}")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self.n = n
        self.masks: Tuple[int, ...] = tuple(masks)
        self.adjacency: Tuple[Tuple[int, ...], ...] = tuple(
            tuple(iter_bits(mask)) for mask in masks
        )
        self.m = sum(len(neighbors) for neighbors in self.adjacency) // 2
        self.full_mask = (1 << n) - 1

    @classmethod
    def from_networkx(cls, nx_graph) -> Graph:
        """Convert a networkx graph whose nodes are ``0..n-1``."""
        n = nx_graph.number_of_nodes()
        return cls(n, ((u, v) for u, v in nx_graph.edges() if u != v))

    def to_networkx(self):
        import networkx as nx

        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(range(self.n))
        nx_graph.add_edges_from(self.edges())
        return nx_graph

    def vertices(self) -> VertexSet:
        return VertexSet.full(self.n)

    def empty_set(self) -> VertexSet:
        return VertexSet.empty(self.n)

    def vertex_set(self, members: Iterable[int]) -> VertexSet:
        return VertexSet(self.n, members)

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def edges(self) -> Iterator[Tuple[int, int]]:
        """Yield every edge once as ``(u, v)`` with ``u < v``, sorted."""
        for u, neighbors in enumerate(self.adjacency):
            for v in neighbors:
                if v > u:
                    yield u, v

    def neighborhood_bits(self, bits: int) -> int:
        """N(W) as a bitmask, for W given as a bitmask."""
        result = 0
        for v in iter_bits(bits):
            result |= self.masks[v]
        return result

    def neighborhood(self, vertices: VertexSet) -> VertexSet:
        """Open neighborhood N(W) = union of N(v) over v in W."""
        return VertexSet.from_bits(self.n, self.neighborhood_bits(vertices.bits))

    def closed_neighborhood(self, v: int) -> VertexSet:
        """N+(v) = N(v) plus v itself."""
        return VertexSet.from_bits(self.n, self.masks[v] | (1 << v))

    def non_isolated(self) -> VertexSet:
        bits = 0
        for v, mask in enumerate(self.masks):
            if mask:
                bits |= 1 << v
        return VertexSet.from_bits(self.n, bits)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


class SubgraphView:
    """Subgraph of ``parent`` induced by ``selected``, with compact local ids.

    ``to_parent[i]`` is the parent id of local vertex ``i``; ``to_local``
    maps back. ``graph`` is the compact induced graph itself.
    """

    def __init__(self, parent: Graph, selected: VertexSet):
        if selected.n != parent.n:
            raise ValueError("selected set is not over the parent's vertices")
        self.parent = parent
        self.selected = selected
        self.to_parent: Tuple[int, ...] = tuple(selected)
        self.to_local = {v: i for i, v in enumerate(self.to_parent)}
        local_edges = []
        for i, v in enumerate(self.to_parent):
            for u in iter_bits(parent.masks[v] & selected.bits):
                if u > v:
                    local_edges.append((i, self.to_local[u]))
        self.graph = Graph(len(self.to_parent), local_edges)

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def m(self) -> int:
        return self.graph.m

    def lift(self, local: VertexSet) -> VertexSet:
        """Map a set of local ids back to parent ids."""
        bits = 0
        for i in local:
            bits |= 1 << self.to_parent[i]
        return VertexSet.from_bits(self.parent.n, bits)

    def restrict(self, vertices: VertexSet) -> VertexSet:
        """Map the selected part of a parent set to local ids."""
        return VertexSet(
            self.graph.n, (self.to_local[v] for v in vertices & self.selected)
        )

    def __repr__(self) -> str:
        return f"SubgraphView(n={self.n}, m={self.m}, parent_n={self.parent.n})"


def induced_subgraph(graph: Graph, vertices: VertexSet) -> SubgraphView:
    """Return the view of ``graph`` induced by ``vertices``."""
    return SubgraphView(graph, vertices)


def is_vertex_cover(graph: Graph, cover: VertexSet) -> bool:
    """True iff every edge of ``graph`` has an endpoint in ``cover``."""
    outside = graph.full_mask & ~cover.bits
    return all(graph.masks[v] & outside == 0 for v in iter_bits(outside))


def cover_bits_ok(masks: Sequence[int], cover_bits: int, universe: int) -> bool:
    """Bitmask form of :func:`is_vertex_cover` restricted to ``universe``."""
    outside = universe & ~cover_bits
    return all(masks[v] & outside == 0 for v in iter_bits(outside))


def edge_count_within(graph: Graph, bits: int) -> int:
    """Number of edges of ``graph`` with both endpoints in ``bits``."""
    return sum((graph.masks[v] & bits).bit_count() for v in iter_bits(bits)) // 2


def isolated_within(graph: Graph, bits: int) -> int:
    """Vertices of ``bits`` with no neighbor inside ``bits``, as a bitmask."""
    isolated = 0
    for v in iter_bits(bits):
        if graph.masks[v] & bits == 0:
            isolated |= 1 << v
    return isolated


def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    return Graph(n, ((i, (i + 1) % n) for i in range(n)) if n >= 3 else ())


def complete_graph(n: int) -> Graph:
    return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with the center at vertex 0."""
    return Graph(leaves + 1, ((0, i) for i in range(1, leaves + 1)))
