"""Greedy crown kernel (standard, 3k vertices) built on two matchings."""

from __future__ import annotations

import logging
from typing import List, Optional, Tuple

from graphs.graph import Graph, SubgraphView, VertexSet, isolated_within, iter_bits
from graphs.matching import (
    UNMATCHED,
    BipartiteGraph,
    greedy_maximal_matching,
    hopcroft_karp,
)
from kernels.partition import CrownDecomposition, CrownReduction

logger = logging.getLogger(__name__)


def crown_kernel(graph: Graph, k: int) -> Tuple[Optional[CrownDecomposition], bool]:
    """Find one crown of ``graph`` for budget ``k``.

    Returns ``(crown, infeasible)``. ``crown`` is ``None`` when the
    maximum matching between the unmatched vertices O of a greedy maximal
    matching and N(O) saturates O. ``infeasible`` is set when either
    matching is larger than ``k``, since any matching lower-bounds the cover.
    Isolated vertices take no part in the matchings; they join the crown
    body when a crown is found.
    """
    if k < 0:
        raise ValueError("budget must be nonnegative")

    first = greedy_maximal_matching(graph)
    if first.size > k:
        return None, True

    isolated = graph.vertices() - graph.non_isolated()
    outsiders = graph.vertices() - first.matched() - isolated
    if not outsiders:
        return None, False

    left = outsiders.to_list()
    right = graph.neighborhood(outsiders).to_list()
    right_index = {v: j for j, v in enumerate(right)}
    bipartite = BipartiteGraph(
        len(left),
        len(right),
        ((i, right_index[u]) for i, v in enumerate(left) for u in graph.adjacency[v]),
    )
    second = hopcroft_karp(bipartite)
    if second.size > k:
        return None, True

    crown_bits = 0
    for i, v in enumerate(left):
        if second.pair_left[i] == UNMATCHED:
            crown_bits |= 1 << v
    if not crown_bits:
        return None, False

    while True:
        grown = crown_bits
        for w in iter_bits(graph.neighborhood_bits(crown_bits)):
            # N(I) is saturated by a maximum matching
            partner = second.pair_right[right_index[w]]
            grown |= 1 << left[partner]
        if grown == crown_bits:
            break
        crown_bits = grown

    crown = VertexSet.from_bits(graph.n, crown_bits)
    head = graph.neighborhood(crown)
    pairs: List[Tuple[int, int]] = [
        (w, left[second.pair_right[right_index[w]]]) for w in head
    ]
    crown = crown | isolated
    rest = graph.vertices() - head - crown
    logger.debug(f"Crown found: |W|={len(head)} |I|={len(crown)} |H|={len(rest)}")
    return CrownDecomposition(head=head, crown=crown, rest=rest, matching=pairs), False


def exhaustive_crown_kernel(graph: Graph, k: int) -> CrownReduction:
    """Strip isolated vertices and remove crowns until none is found.

    Crown heads are charged against ``k``. When the minimum cover of
    ``graph`` is at most ``k`` the residual has at most 3k vertices.
    """
    cover = graph.empty_set()
    discarded = graph.vertices() - graph.non_isolated()
    selected = graph.non_isolated()
    crowns = 0

    while True:
        view = SubgraphView(graph, selected)
        budget = k - len(cover)
        if budget < 0:
            return CrownReduction(view, cover, discarded, infeasible=True, crowns=crowns)
        found, infeasible = crown_kernel(view.graph, budget)
        if infeasible:
            return CrownReduction(view, cover, discarded, infeasible=True, crowns=crowns)
        if found is None:
            return CrownReduction(view, cover, discarded, crowns=crowns)
        crowns += 1
        cover = cover | view.lift(found.head)
        discarded = discarded | view.lift(found.crown)
        selected = selected - view.lift(found.head) - view.lift(found.crown)
        stranded = VertexSet.from_bits(graph.n, isolated_within(graph, selected.bits))
        discarded = discarded | stranded
        selected = selected - stranded
