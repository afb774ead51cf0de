"""Cardinality, 2-clause and balance constraints over the cover variable S."""

from __future__ import annotations

import logging
from abc import ABC, abstractmethod
from typing import FrozenSet, List, Optional, Sequence

from graphs.graph import Graph, VertexSet, is_vertex_cover, iter_bits
from solver.domains import DomainWipeout, PropagationState

logger = logging.getLogger(__name__)

SET_VAR = "S"
INT_VAR = "K"


class Constraint(ABC):
    """A propagator plus a checker for complete assignments.

    ``propagate`` may only shrink domains and raises DomainWipeout on
    failure. ``watches`` names the variables whose changes wake it up.
    """

    name: str = "constraint"
    watches: FrozenSet[str] = frozenset({SET_VAR, INT_VAR})

    @abstractmethod
    def propagate(self, state: PropagationState) -> None:
        ...

    @abstractmethod
    def check(self, selection: VertexSet) -> bool:
        ...

    def __repr__(self) -> str:
        return f"{type(self).__name__}()"


class CardinalityConstraint(Constraint):
    """Channel K with |S|, so that |S| <= ub(K) and lb(K) <= |S|."""

    name = "cardinality"

    def __init__(self, limit: Optional[int] = None):
        self.limit = limit

    def propagate(self, state: PropagationState) -> None:
        s, k = state.s, state.k
        s.set_card_max(min(k.max, len(s.ub)))
        s.set_card_min(max(k.min, len(s.lb)))
        k.set_min(s.card_min)
        k.set_max(s.card_max)
        if s.card_max == len(s.lb):
            s.exclude(s.undecided)
        elif s.card_min == len(s.ub):
            s.include(s.undecided)

    def check(self, selection: VertexSet) -> bool:
        return self.limit is None or len(selection) <= self.limit


class EdgeClauses(Constraint):
    """One 2-clause (u in S or v in S) per edge, by unit propagation."""

    name = "edge_clauses"
    watches = frozenset({SET_VAR})

    def __init__(self, graph: Graph):
        self.graph = graph

    def propagate(self, state: PropagationState) -> None:
        s = state.s
        excluded = s.ub.complement()
        forced = self.graph.neighborhood(excluded)
        if not forced.isdisjoint(excluded):
            raise DomainWipeout("edge with both endpoints excluded")
        s.include(forced)

    def check(self, selection: VertexSet) -> bool:
        return is_vertex_cover(self.graph, selection)


class BalanceConstraint(Constraint):
    """max_i |s_i ∩ S| - min_i |s_i ∩ S| <= b over the blocks s_i of a partition.

    Bounds reasoning on the per-block counts only: each count interval is
    kept within ``b`` of the others and, once an interval collapses onto
    what lb or ub already give, the block's undecided vertices are settled.
    """

    name = "balance"
    watches = frozenset({SET_VAR})

    def __init__(self, parts: Sequence[VertexSet], b: int):
        if b < 0:
            raise ValueError("balance tolerance must be nonnegative")
        self.parts: List[VertexSet] = list(parts)
        self.b = b

    def propagate(self, state: PropagationState) -> None:
        s = state.s
        if len(state.block_counts) != len(self.parts):
            state.block_counts = [[0, len(part)] for part in self.parts]

        low = []
        high = []
        for counts, part in zip(state.block_counts, self.parts):
            low.append(max(counts[0], len(s.lb & part)))
            high.append(min(counts[1], len(s.ub & part)))

        ceiling = min(high) + self.b
        floor = max(low) - self.b
        for i in range(len(self.parts)):
            high[i] = min(high[i], ceiling)
            low[i] = max(low[i], floor)
            if low[i] > high[i]:
                raise DomainWipeout(f"block {i} cannot stay within {self.b} of the others")
        state.block_counts = [[lo, hi] for lo, hi in zip(low, high)]

        for i, part in enumerate(self.parts):
            open_part = s.undecided & part
            if not open_part:
                continue
            if high[i] == len(s.lb & part):
                s.exclude(open_part)
            elif low[i] == len(s.ub & part):
                s.include(open_part)

    def check(self, selection: VertexSet) -> bool:
        counts = [len(selection & part) for part in self.parts]
        return not counts or max(counts) - min(counts) <= self.b


def post_cardinality(model: List[Constraint], limit: Optional[int] = None) -> Constraint:
    constraint = CardinalityConstraint(limit)
    model.append(constraint)
    return constraint


def post_edge_clauses(model: List[Constraint], graph: Graph) -> Constraint:
    constraint = EdgeClauses(graph)
    model.append(constraint)
    return constraint


def post_balance(model: List[Constraint], parts: Sequence[VertexSet], b: int) -> Constraint:
    constraint = BalanceConstraint(parts, b)
    model.append(constraint)
    return constraint


def partition_sets(n: int, parts: Sequence[Sequence[int]]) -> List[VertexSet]:
    """Blocks given as vertex lists, checked to partition 0..n-1."""
    sets = [VertexSet(n, part) for part in parts]
    seen = 0
    for block in sets:
        if seen & block.bits:
            raise ValueError("partition blocks overlap")
        seen |= block.bits
    if seen != (1 << n) - 1:
        missing = list(iter_bits(((1 << n) - 1) & ~seen))
        raise ValueError(f"partition misses vertices {missing[:10]}")
    return sets
