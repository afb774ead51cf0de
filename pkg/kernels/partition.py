"""Result types shared by the kernels."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Tuple

from graphs.graph import Graph, SubgraphView, VertexSet


@dataclass
class LosslessPartition:
    """Partition (H, F, R, I) of a graph's vertices produced by a loss-less kernel.

    ``forced`` lies in every solution the kernel protects, ``restricted`` in
    none, ``indifferent`` can be dropped, and ``residual`` is the induced
    subgraph still to be solved. ``budget`` is the parameter left after the
    forced vertices were charged (Buss only; ``None`` for budget-free kernels).
    """

    residual: SubgraphView
    forced: VertexSet
    restricted: VertexSet
    indifferent: VertexSet
    infeasible: bool = False
    budget: int | None = None

    @property
    def graph(self) -> Graph:
        return self.residual.parent

    def parts_are_disjoint(self) -> bool:
        blocks = [self.residual.selected, self.forced, self.restricted, self.indifferent]
        union = self.graph.empty_set()
        for block in blocks:
            if not union.isdisjoint(block):
                return False
            union = union | block
        return union == self.graph.vertices()


@dataclass
class CrownDecomposition:
    """Crown decomposition (H, W, I) of a graph.

    ``head`` is W, ``crown`` is I and ``rest`` is H. I is independent, has no
    edge to H, and ``matching`` pairs every head vertex with a crown vertex.
    """

    head: VertexSet
    crown: VertexSet
    rest: VertexSet
    matching: List[Tuple[int, int]] = field(default_factory=list)

    def is_valid(self, graph: Graph) -> bool:
        """Check the three crown conditions directly against ``graph``."""
        if (self.head | self.crown | self.rest) != graph.vertices():
            return False
        if not self.head.isdisjoint(self.crown) or not self.head.isdisjoint(self.rest):
            return False
        if not self.crown.isdisjoint(self.rest):
            return False
        crown_bits = self.crown.bits
        for v in self.crown:
            if graph.masks[v] & crown_bits or graph.masks[v] & self.rest.bits:
                return False
        matched_heads = {w for w, _ in self.matching}
        matched_crown = {i for _, i in self.matching}
        if len(matched_heads) != len(self.matching) or len(matched_crown) != len(self.matching):
            return False
        if matched_heads != set(self.head):
            return False
        return all(i in self.crown and graph.has_edge(w, i) for w, i in self.matching)


@dataclass
class CrownReduction:
    """Outcome of removing crowns until none is left.

    ``cover`` collects every crown head (taken into the cover), ``discarded``
    every crown body and isolated vertex. ``crowns`` counts the rounds that
    found a crown.
    """

    residual: SubgraphView
    cover: VertexSet
    discarded: VertexSet
    infeasible: bool = False
    crowns: int = 0
