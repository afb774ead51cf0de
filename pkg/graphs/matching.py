"""Maximal and maximum matchings, and M-alternating reachability.

Hopcroft-Karp follows the usual BFS-layers / DFS-augment scheme, with the
DFS unrolled onto an explicit stack so long augmenting paths on large
instances do not hit the recursion limit. All scans go by ascending index.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from graphs.graph import Graph, VertexSet

logger = logging.getLogger(__name__)

UNMATCHED = -1


class BipartiteGraph:
    """Bipartite graph with ``left_n`` left and ``right_n`` right vertices.

    ``edges[u]`` is the sorted list of right neighbors of left vertex ``u``.
    """

    def __init__(self, left_n: int, right_n: int, edges: Iterable[Tuple[int, int]]):
        adjacency: List[set] = [set() for _ in range(left_n)]
        for u, v in edges:
            if not 0 <= u < left_n:
                raise ValueError(f"left vertex {u} out of range")
            if not 0 <= v < right_n:
                raise ValueError(f"right vertex {v} out of range")
            adjacency[u].add(v)
        self.left_n = left_n
        self.right_n = right_n
        self.edges: Tuple[Tuple[int, ...], ...] = tuple(
            tuple(sorted(neighbors)) for neighbors in adjacency
        )
        right_adjacency: List[List[int]] = [[] for _ in range(right_n)]
        for u, neighbors in enumerate(self.edges):
            for v in neighbors:
                right_adjacency[v].append(u)
        self.right_edges: Tuple[Tuple[int, ...], ...] = tuple(
            tuple(neighbors) for neighbors in right_adjacency
        )

    @property
    def edge_count(self) -> int:
        return sum(len(neighbors) for neighbors in self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.edges[u]


@dataclass
class Matching:
    """Bipartite matching as two mutually inverse partial maps (-1 = free)."""

    pair_left: List[int]
    pair_right: List[int]

    @classmethod
    def empty(cls, left_n: int, right_n: int) -> Matching:
        return cls([UNMATCHED] * left_n, [UNMATCHED] * right_n)

    @property
    def size(self) -> int:
        return sum(1 for v in self.pair_left if v != UNMATCHED)

    def pairs(self) -> List[Tuple[int, int]]:
        return [(u, v) for u, v in enumerate(self.pair_left) if v != UNMATCHED]

    def copy(self) -> Matching:
        return Matching(list(self.pair_left), list(self.pair_right))

    def is_valid_for(self, graph: BipartiteGraph) -> bool:
        """Mutual inverse maps whose pairs are edges of ``graph``."""
        if len(self.pair_left) != graph.left_n or len(self.pair_right) != graph.right_n:
            return False
        for u, v in enumerate(self.pair_left):
            if v == UNMATCHED:
                continue
            if self.pair_right[v] != u or not graph.has_edge(u, v):
                return False
        return all(
            u == UNMATCHED or self.pair_left[u] == v
            for v, u in enumerate(self.pair_right)
        )


@dataclass
class EdgeMatching:
    """Matching of a general graph: ``mate[v]`` is v's partner or -1."""

    mate: List[int]

    @property
    def size(self) -> int:
        return sum(1 for v, u in enumerate(self.mate) if u != UNMATCHED and v < u)

    def edges(self) -> List[Tuple[int, int]]:
        return [(v, u) for v, u in enumerate(self.mate) if u != UNMATCHED and v < u]

    def matched(self) -> VertexSet:
        n = len(self.mate)
        return VertexSet(n, (v for v, u in enumerate(self.mate) if u != UNMATCHED))


def greedy_maximal_matching(graph: Graph) -> EdgeMatching:
    """Scan vertices then neighbors ascending, taking every edge with two free ends."""
    mate = [UNMATCHED] * graph.n
    for v in range(graph.n):
        if mate[v] != UNMATCHED:
            continue
        for u in graph.adjacency[v]:
            if mate[u] == UNMATCHED:
                mate[v] = u
                mate[u] = v
                break
    return EdgeMatching(mate)


def is_maximal(graph: Graph, matching: EdgeMatching) -> bool:
    """No edge of ``graph`` joins two unmatched vertices."""
    return all(
        matching.mate[u] != UNMATCHED or matching.mate[v] != UNMATCHED
        for u, v in graph.edges()
    )


class HopcroftKarp:
    """Maximum-cardinality matching of a :class:`BipartiteGraph`."""

    def __init__(self, graph: BipartiteGraph, warm_start: Optional[Matching] = None):
        self.graph = graph
        if warm_start is not None and warm_start.is_valid_for(graph):
            self.matching = warm_start.copy()
        else:
            if warm_start is not None:
                logger.debug("Warm-start matching does not fit the graph; starting empty")
            self.matching = Matching.empty(graph.left_n, graph.right_n)
        self._infinity = graph.left_n + 1
        self._dist: List[int] = []
        self._limit = self._infinity

    def _layer(self) -> bool:
        """BFS from free left vertices; True if some free right vertex is reachable."""
        pair_left = self.matching.pair_left
        pair_right = self.matching.pair_right
        infinity = self._infinity
        dist = [infinity] * self.graph.left_n
        queue = deque()
        for u in range(self.graph.left_n):
            if pair_left[u] == UNMATCHED:
                dist[u] = 0
                queue.append(u)
        limit = infinity
        while queue:
            u = queue.popleft()
            if dist[u] >= limit:
                continue
            for v in self.graph.edges[u]:
                w = pair_right[v]
                if w == UNMATCHED:
                    if limit == infinity:
                        limit = dist[u] + 1
                elif dist[w] == infinity:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        self._dist = dist
        self._limit = limit
        return limit != infinity

    def _augment(self, root: int, cursor: List[int]) -> bool:
        """Layered DFS from ``root``; flips the path when it reaches a free right vertex."""
        pair_left = self.matching.pair_left
        pair_right = self.matching.pair_right
        dist = self._dist
        edges = self.graph.edges
        stack = [root]
        via: List[int] = []
        while stack:
            u = stack[-1]
            advanced = False
            while cursor[u] < len(edges[u]):
                v = edges[u][cursor[u]]
                cursor[u] += 1
                w = pair_right[v]
                if w == UNMATCHED:
                    if dist[u] + 1 != self._limit:
                        continue
                    via.append(v)
                    for left, right in zip(stack, via):
                        pair_left[left] = right
                        pair_right[right] = left
                    return True
                if dist[w] == dist[u] + 1:
                    via.append(v)
                    stack.append(w)
                    advanced = True
                    break
            if not advanced:
                dist[u] = self._infinity
                stack.pop()
                if via:
                    via.pop()
        return False

    def run(self) -> Matching:
        phases = 0
        while self._layer():
            phases += 1
            cursor = [0] * self.graph.left_n
            for u in range(self.graph.left_n):
                if self.matching.pair_left[u] == UNMATCHED:
                    self._augment(u, cursor)
        logger.debug(
            f"Hopcroft-Karp: {phases} phases, matching size {self.matching.size}"
        )
        return self.matching


def hopcroft_karp(
    graph: BipartiteGraph, warm_start: Optional[Matching] = None
) -> Matching:
    """Maximum matching of ``graph``; a still-valid ``warm_start`` seeds the search."""
    return HopcroftKarp(graph, warm_start).run()


@dataclass
class AlternatingReach:
    """Vertices reachable by even-length M-alternating paths, per side."""

    left: VertexSet
    right: VertexSet


def even_alternating_reachable(
    graph: BipartiteGraph, matching: Matching
) -> AlternatingReach:
    """All vertices reachable from an unmatched vertex by an even alternating path.

    Paths leave the unmatched start by a non-matching edge and return through
    a matching edge, so from free left vertices only left vertices are
    reached at even length, and symmetrically on the right. Length-0 paths
    count: every unmatched vertex is in the result.
    """
    pair_left = matching.pair_left
    pair_right = matching.pair_right
    left = _even_reach(
        graph.left_n,
        [u for u in range(graph.left_n) if pair_left[u] == UNMATCHED],
        graph.edges,
        pair_right,
    )
    right = _even_reach(
        graph.right_n,
        [v for v in range(graph.right_n) if pair_right[v] == UNMATCHED],
        graph.right_edges,
        pair_left,
    )
    return AlternatingReach(left=left, right=right)


def _even_reach(
    size: int,
    starts: Sequence[int],
    adjacency: Sequence[Sequence[int]],
    partner_of_other_side: Sequence[int],
) -> VertexSet:
    reached = [False] * size
    queue = deque()
    for s in starts:
        reached[s] = True
        queue.append(s)
    while queue:
        x = queue.popleft()
        for y in adjacency[x]:
            z = partner_of_other_side[y]
            if z != UNMATCHED and not reached[z]:
                reached[z] = True
                queue.append(z)
    return VertexSet(size, (x for x in range(size) if reached[x]))
