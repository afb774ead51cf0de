"""Exact minimum vertex cover: clique-cover bound, branch & bound, brute force."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, List, Optional

from graphs.graph import Graph, VertexSet, cover_bits_ok, isolated_within, iter_bits
from graphs.matching import greedy_maximal_matching
from solver.config import SolverConfig

logger = logging.getLogger(__name__)

# bound(graph, residual_bits) -> lower bound on the cover of graph[residual]
BoundFunction = Callable[[Graph, int], int]


@dataclass
class CliqueCover:
    """Disjoint cliques whose union is the vertex set."""

    cliques: List[VertexSet] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.cliques)


@dataclass
class SearchOutcome:
    """Best cover found by branch & bound.

    ``optimal`` holds only when the tree was exhausted: neither the node
    budget nor the early-stop target cut the search short.
    """

    cover: VertexSet
    optimal: bool
    nodes_explored: int
    lower_bound_at_root: int
    stopped_early: bool = False

    @property
    def size(self) -> int:
        return len(self.cover)


def _by_degree(graph: Graph, bits: int) -> List[int]:
    return sorted(iter_bits(bits), key=lambda v: (-(graph.masks[v] & bits).bit_count(), v))


def _clique_masks(graph: Graph, bits: int) -> List[int]:
    cliques: List[int] = []
    for v in _by_degree(graph, bits):
        neighbors = graph.masks[v]
        for i, clique in enumerate(cliques):
            if neighbors & clique == clique:
                cliques[i] = clique | (1 << v)
                break
        else:
            cliques.append(1 << v)
    return cliques


def clique_cover(graph: Graph) -> CliqueCover:
    """Greedy clique cover: by descending degree, join the first clique fully adjacent."""
    return CliqueCover(
        [VertexSet.from_bits(graph.n, c) for c in _clique_masks(graph, graph.full_mask)]
    )


def clique_cover_bound(graph: Graph, bits: int) -> int:
    """|W| - |T| for a greedy clique cover T of graph[W]."""
    return bits.bit_count() - len(_clique_masks(graph, bits))


def trivial_bound(graph: Graph, bits: int) -> int:
    return 0


def lower_bound(graph: Graph) -> int:
    """|V| - |T|: a clique of size s needs s - 1 cover vertices."""
    return clique_cover_bound(graph, graph.full_mask)


def greedy_cover(graph: Graph) -> VertexSet:
    """Both endpoints of a greedy maximal matching (a 2-approximation)."""
    return greedy_maximal_matching(graph).matched()


def branch_and_bound_vc(
    graph: Graph,
    node_limit: Optional[int] = None,
    upper_bound: Optional[int] = None,
    bound: BoundFunction = clique_cover_bound,
) -> SearchOutcome:
    """Depth-first branch & bound for a minimum vertex cover.

    Branches on the vertex of maximum residual degree (lowest index on ties):
    first into the cover, then its neighborhood into the cover. Each
    branching decision counts one node; ``node_limit`` caps them (``None``
    is unlimited). With ``upper_bound`` set the search stops as soon as a
    cover strictly smaller than it is known.
    """
    masks = graph.masks
    incumbent = greedy_cover(graph).bits
    best_size = incumbent.bit_count()
    root_bound = bound(graph, graph.full_mask)

    def target_reached() -> bool:
        return upper_bound is not None and best_size < upper_bound

    nodes = 0
    stopped = False
    limited = False
    stack = [(graph.full_mask, 0)]
    while stack:
        remaining, chosen = stack.pop()
        remaining &= ~isolated_within(graph, remaining)
        chosen_size = chosen.bit_count()

        if not remaining:
            if chosen_size < best_size:
                incumbent, best_size = chosen, chosen_size
                logger.debug(f"B&B incumbent {best_size} after {nodes} nodes")
                if target_reached() and stack:
                    stopped = True
                    break
            continue
        if chosen_size + bound(graph, remaining) >= best_size:
            continue
        if target_reached():
            stopped = True
            break
        if node_limit is not None and nodes >= node_limit:
            limited = True
            break

        nodes += 1
        pivot, pivot_degree = -1, -1
        for v in iter_bits(remaining):
            degree = (masks[v] & remaining).bit_count()
            if degree > pivot_degree:
                pivot, pivot_degree = v, degree
        neighbors = masks[pivot] & remaining
        stack.append((remaining & ~neighbors & ~(1 << pivot), chosen | neighbors))
        stack.append((remaining & ~(1 << pivot), chosen | (1 << pivot)))

    return SearchOutcome(
        cover=VertexSet.from_bits(graph.n, incumbent),
        optimal=not (stopped or limited),
        nodes_explored=nodes,
        lower_bound_at_root=root_bound,
        stopped_early=stopped,
    )


def brute_force_min_vc(graph: Graph) -> VertexSet:
    """Smallest cover by enumeration in increasing size; lexicographically first."""
    if graph.n > SolverConfig.BRUTE_FORCE_MAX_N:
        raise ValueError(
            f"brute force limited to n <= {SolverConfig.BRUTE_FORCE_MAX_N}, got {graph.n}"
        )
    masks = graph.masks
    for size in range(graph.n + 1):
        for combo in combinations(range(graph.n), size):
            bits = 0
            for v in combo:
                bits |= 1 << v
            if cover_bits_ok(masks, bits, graph.full_mask):
                return VertexSet.from_bits(graph.n, bits)
    return graph.vertices()
