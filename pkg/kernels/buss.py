"""Buss kernel: high-degree vertices are forced, isolated ones are indifferent."""

from __future__ import annotations

import logging

from graphs.graph import (
    Graph,
    SubgraphView,
    VertexSet,
    edge_count_within,
    isolated_within,
    iter_bits,
)
from kernels.partition import LosslessPartition

logger = logging.getLogger(__name__)


def buss_kernel(graph: Graph, k: int) -> LosslessPartition:
    """Apply the Buss rule to a fixpoint for budget ``k``.

    A vertex of degree greater than the remaining budget k' lies in every
    cover of size at most k', so it is forced and k' drops by one. Vertices
    are examined by descending degree, ties by lowest index. Once nothing
    more can be forced, isolated vertices become indifferent and the
    instance is flagged infeasible when the residual keeps more than k'^2
    edges.
    """
    if k < 0:
        raise ValueError("budget must be nonnegative")

    remaining = graph.full_mask
    degrees = [mask.bit_count() for mask in graph.masks]
    budget = k
    forced = 0

    while budget > 0:
        best, best_degree = -1, budget
        for v in iter_bits(remaining):
            if degrees[v] > best_degree:
                best, best_degree = v, degrees[v]
        if best < 0:
            break
        forced |= 1 << best
        remaining &= ~(1 << best)
        for u in iter_bits(graph.masks[best] & remaining):
            degrees[u] -= 1
        budget -= 1

    isolated = isolated_within(graph, remaining)
    remaining &= ~isolated

    residual_edges = edge_count_within(graph, remaining)
    infeasible = residual_edges > budget * budget
    if infeasible:
        logger.debug(
            f"Buss kernel: {residual_edges} residual edges exceed budget {budget}^2"
        )

    return LosslessPartition(
        residual=SubgraphView(graph, VertexSet.from_bits(graph.n, remaining)),
        forced=VertexSet.from_bits(graph.n, forced),
        restricted=graph.empty_set(),
        indifferent=VertexSet.from_bits(graph.n, isolated),
        infeasible=infeasible,
        budget=budget,
    )
