"""The VertexCover global constraint and its five method variants.

One call of :func:`propagate_vertex_cover` runs, in order: neighborhood
closure of the excluded vertices, the Buss kernel on the undecided part,
witness recomputation through crowns and a bounded branch & bound when the
cached witness no longer fits the domains, lower-bounding K, rigid-crown
pruning when K is fixed, witness pruning when the gap on K is small, and
finally forcing the kernel-forced vertices into S.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from graphs.graph import Graph, SubgraphView, VertexSet, is_vertex_cover
from kernels.buss import buss_kernel
from kernels.crown import exhaustive_crown_kernel
from kernels.rigid import rigid_crown_kernel
from solver.config import Method, MethodConfig
from solver.constraints import (
    Constraint,
    partition_sets,
    post_balance,
    post_cardinality,
    post_edge_clauses,
)
from solver.domains import DomainWipeout, IntDomain, PropagationState, SetDomain
from solver.search import branch_and_bound_vc, lower_bound

logger = logging.getLogger(__name__)


@dataclass
class Witness:
    """Cached vertex cover of the whole graph, in original vertex ids."""

    cover: VertexSet
    optimal: bool = False

    @classmethod
    def initial(cls, graph: Graph) -> Witness:
        return cls(graph.vertices(), False)


@dataclass
class PropagatorStats:
    calls: int = 0
    witness_searches: int = 0
    optimal_witnesses: int = 0
    reused_witnesses: int = 0
    witness_violations: int = 0
    rigid_prunings: int = 0
    witness_prunings: int = 0


def witness_pruning(
    graph: Graph,
    witness: Witness,
    ub_k: int,
    lb_s: VertexSet,
    max_subset_size: Optional[int] = None,
) -> VertexSet:
    """Vertices of the witness that every cover of size <= ``ub_k`` must contain.

    Works on G minus ``lb_s`` with ``witness.cover`` minus ``lb_s`` as its
    minimum cover w. For v in w, take J = {u in N(v) \\ w : N(u) ⊆ N+(v)};
    a cover avoiding v then has at least |w| + |J| - 1 vertices, so v is
    forced when that exceeds the remaining budget. ``max_subset_size``
    caps |J| (2 gives the singleton-and-pair enumeration).
    """
    if not witness.optimal:
        return graph.empty_set()
    residual = graph.full_mask & ~lb_s.bits
    cover_bits = witness.cover.bits & residual
    cover_size = cover_bits.bit_count()
    budget = ub_k - len(lb_s)
    forced = 0

    for v in VertexSet.from_bits(graph.n, cover_bits):
        closed = graph.masks[v] | (1 << v)
        subset = 0
        for u in VertexSet.from_bits(graph.n, graph.masks[v] & residual & ~cover_bits):
            if graph.masks[u] & residual & ~closed == 0:
                subset |= 1 << u
        size = subset.bit_count()
        if max_subset_size is not None:
            size = min(size, max_subset_size)
        if size and cover_size + size - 1 > budget:
            forced |= 1 << v
    return VertexSet.from_bits(graph.n, forced)


def propagate_vertex_cover(
    s: SetDomain,
    k: IntDomain,
    graph: Graph,
    config: MethodConfig,
    witness: Witness,
    stats: Optional[PropagatorStats] = None,
) -> Witness:
    """Prune S and K in place for the constraint "S is a vertex cover of graph, |S| <= K".

    Returns the (possibly recomputed) witness; raises DomainWipeout when the
    domains admit no cover.
    """
    if stats is None:
        stats = PropagatorStats()
    stats.calls += 1

    # neighborhood of the excluded vertices
    excluded = s.ub.complement()
    required = graph.neighborhood(excluded)
    if not required.isdisjoint(excluded):
        raise DomainWipeout("edge with both endpoints excluded")
    s.include(required)
    if len(s.lb) > k.max:
        raise DomainWipeout(f"{len(s.lb)} required vertices exceed ub(K)={k.max}")

    # Buss kernel on the undecided part
    free = SubgraphView(graph, s.undecided)
    buss = buss_kernel(free.graph, k.max - len(s.lb))
    if buss.infeasible:
        raise DomainWipeout("Buss kernel: no cover within budget")
    forced_buss = free.lift(buss.forced)
    buss_view = buss.residual

    fresh = False
    # lower bound on |S| established by this call, None when the witness is reused
    proven: Optional[int] = None
    if not witness.cover <= s.ub or len(witness.cover | s.lb) >= k.max:
        if config.uses_crowns:
            reduction = exhaustive_crown_kernel(buss_view.graph, buss.budget)
            if reduction.infeasible:
                raise DomainWipeout("crown kernel: matching exceeds budget")
            crown_head = free.lift(buss_view.lift(reduction.cover))
            kernel_view = reduction.residual
        else:
            crown_head = graph.empty_set()
            kernel_view = SubgraphView(buss_view.graph, buss_view.graph.vertices())
        settled = len(s.lb) + len(forced_buss) + len(crown_head)

        if config.node_limit > 0:
            outcome = branch_and_bound_vc(
                kernel_view.graph,
                node_limit=config.node_limit,
                upper_bound=k.max - settled,
            )
            cover = free.lift(buss_view.lift(kernel_view.lift(outcome.cover)))
            witness = Witness(s.lb | forced_buss | crown_head | cover, outcome.optimal)
            fresh = True
            stats.witness_searches += 1
            stats.optimal_witnesses += int(outcome.optimal)
            logger.debug(
                f"Witness {len(witness.cover)} (optimal={outcome.optimal}) on kernel "
                f"n={kernel_view.n} after {outcome.nodes_explored} nodes"
            )

        if fresh and witness.optimal:
            proven = len(witness.cover)
        else:
            proven = settled + lower_bound(kernel_view.graph)
        k.set_min(proven)
    else:
        stats.reused_witnesses += 1
        reused = witness.cover | s.lb
        if not is_vertex_cover(graph, reused) or len(reused) >= k.max:
            stats.witness_violations += 1
            logger.warning("Reused witness is not a cover below ub(K)")

    forced_rigid = graph.empty_set()
    # rigid crowns are only safe once every cover left in the domains is minimum
    tight = proven is not None and proven >= k.max
    if config.uses_rigid_crowns and k.min == k.max and tight:
        rigid = rigid_crown_kernel(free.graph)
        restricted = free.lift(rigid.restricted)
        forced_rigid = free.lift(rigid.forced)
        if restricted:
            stats.rigid_prunings += len(restricted)
            logger.debug(f"Rigid crowns exclude {len(restricted)} vertices")
        s.exclude(restricted)
    elif (
        config.uses_witness_pruning
        and fresh
        and witness.optimal
        and k.max - k.min <= 2
    ):
        pruned = witness_pruning(graph, witness, k.max, s.lb) - s.lb
        if pruned:
            stats.witness_prunings += len(pruned)
            logger.debug(f"Witness pruning forces {len(pruned)} vertices")
        s.include(pruned)

    s.include(forced_buss | forced_rigid)
    return witness


class VertexCoverPropagator(Constraint):
    """Stateful constraint object: keeps the witness between calls."""

    name = "vertex_cover"

    def __init__(self, graph: Graph, config: MethodConfig):
        if not config.uses_propagator:
            raise ValueError("decomposition is posted as clauses, not as a propagator")
        self.graph = graph
        self.config = config
        self.witness = Witness.initial(graph)
        self.stats = PropagatorStats()

    def propagate(self, state: PropagationState) -> None:
        self.witness = propagate_vertex_cover(
            state.s, state.k, self.graph, self.config, self.witness, self.stats
        )

    def check(self, selection: VertexSet) -> bool:
        return is_vertex_cover(self.graph, selection)

    def __repr__(self) -> str:
        return f"VertexCoverPropagator({self.config.variant.value})"


def build_model(
    graph: Graph,
    method: Method | str,
    parts: Optional[Sequence[Sequence[int]]] = None,
    b: Optional[int] = None,
    node_limit: Optional[int] = None,
) -> Tuple[PropagationState, List[Constraint]]:
    """Fresh state and constraint list for minimising a (balanced) vertex cover."""
    config = MethodConfig.for_method(method, node_limit)
    state = PropagationState.initial(graph.n)
    model: List[Constraint] = []
    if config.uses_propagator:
        model.append(VertexCoverPropagator(graph, config))
    else:
        post_edge_clauses(model, graph)
    post_cardinality(model)
    if parts is not None:
        if b is None:
            raise ValueError("a partition needs a balance tolerance")
        post_balance(model, partition_sets(graph.n, parts), b)
    return state, model
