"""Rigid crowns via the doubled bipartite graph (0-loss-less kernel).

A vertex v is in the body of the rigid crown when both of its copies v_l
and v_r can be left unmatched by some maximum matching of the doubled
graph, i.e. both are reachable from an unmatched vertex by an even
alternating path. The head N(I) then belongs to every minimum cover and
the body to none.
"""

from __future__ import annotations

import logging

from graphs.graph import Graph, SubgraphView, VertexSet
from graphs.matching import BipartiteGraph, even_alternating_reachable, hopcroft_karp
from kernels.partition import LosslessPartition

logger = logging.getLogger(__name__)


def build_double_graph(graph: Graph) -> BipartiteGraph:
    """Left and right copy of every vertex; edge u-v gives u_l-v_r and v_l-u_r."""
    return BipartiteGraph(
        graph.n,
        graph.n,
        ((v, u) for v in range(graph.n) for u in graph.adjacency[v]),
    )


def rigid_crown(graph: Graph) -> VertexSet:
    """Body I of the rigid crown of ``graph`` from a single matching pass."""
    double = build_double_graph(graph)
    matching = hopcroft_karp(double)
    reach = even_alternating_reachable(double, matching)
    return VertexSet.from_bits(graph.n, reach.left.bits & reach.right.bits)


def rigid_crown_kernel(graph: Graph) -> LosslessPartition:
    """Remove rigid crowns until the residual is rigid-crown free.

    ``forced`` is the union of the heads, ``restricted`` the union of the
    bodies; ``indifferent`` is always empty. When the minimum cover has
    size at most k the residual has at most 2k vertices.
    """
    forced = graph.empty_set()
    restricted = graph.empty_set()
    selected = graph.vertices()
    rounds = 0

    while selected:
        view = SubgraphView(graph, selected)
        body = rigid_crown(view.graph)
        if not body:
            break
        rounds += 1
        head = view.graph.neighborhood(body)
        forced = forced | view.lift(head)
        restricted = restricted | view.lift(body)
        selected = selected - view.lift(head) - view.lift(body)

    if rounds:
        logger.debug(
            f"Rigid crown kernel: {rounds} rounds, |F|={len(forced)} |R|={len(restricted)}"
        )
    return LosslessPartition(
        residual=SubgraphView(graph, selected),
        forced=forced,
        restricted=restricted,
        indifferent=graph.empty_set(),
    )
