"""Propagation fixpoint and depth-first minimisation of |S|."""

from __future__ import annotations

import logging
import time
from collections import deque
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from graphs.graph import Graph, VertexSet
from solver.constraints import INT_VAR, SET_VAR, Constraint
from solver.domains import DomainWipeout, PropagationState

logger = logging.getLogger(__name__)


def fixpoint(constraints: Sequence[Constraint], state: PropagationState) -> bool:
    """Run propagators until nothing changes; False (and ``state.failed``) on wipeout."""
    if state.failed:
        return False
    queue = deque(constraints)
    queued = set(range(len(constraints)))
    index = {id(c): i for i, c in enumerate(constraints)}

    while queue:
        constraint = queue.popleft()
        queued.discard(index[id(constraint)])
        before = state.domains_snapshot()
        try:
            constraint.propagate(state)
        except DomainWipeout as exc:
            logger.debug(f"{constraint.name} failed: {exc.reason}")
            state.failed = True
            return False
        after = state.domains_snapshot()
        if after == before:
            continue
        changed = set()
        if after[:4] != before[:4]:
            changed.add(SET_VAR)
        if after[4:] != before[4:]:
            changed.add(INT_VAR)
        for i, other in enumerate(constraints):
            if i not in queued and other.watches & changed:
                queue.append(other)
                queued.add(i)
    return True


@dataclass
class SearchReport:
    """Outcome of :func:`minimize_search`.

    ``complete`` means the tree was exhausted, so ``best`` is optimal (or
    ``None`` proves infeasibility). Nodes count branching decisions only.
    """

    best: Optional[VertexSet] = None
    best_size: Optional[int] = None
    complete: bool = False
    nodes: int = 0
    nodes_to_best: int = 0
    time_to_best: float = 0.0
    total_time: float = 0.0
    solutions: int = 0
    history: List[Tuple[int, int, float]] = field(default_factory=list)


def _branching_order(graph: Graph) -> List[int]:
    return sorted(range(graph.n), key=lambda v: (-graph.degree(v), v))


def minimize_search(
    state: PropagationState,
    constraints: Sequence[Constraint],
    graph: Graph,
    initial: Optional[VertexSet] = None,
    time_limit: Optional[float] = None,
) -> SearchReport:
    """Branch & bound on the cover size K.

    Branches on the undecided vertex of largest degree in ``graph`` (lowest
    index on ties), inclusion first. Every solution tightens ub(K) to one
    less than its size. ``initial`` is a known solution used as the first
    incumbent; ``time_limit`` is in seconds of monotonic clock.
    """
    start = time.monotonic()
    report = SearchReport()
    order = _branching_order(graph)

    def elapsed() -> float:
        return time.monotonic() - start

    def record(selection: VertexSet) -> None:
        report.best = selection
        report.best_size = len(selection)
        report.solutions += 1
        report.nodes_to_best = report.nodes
        report.time_to_best = elapsed()
        report.history.append((report.best_size, report.nodes, report.time_to_best))
        logger.info(
            f"Incumbent {report.best_size} after {report.nodes} nodes, "
            f"{report.time_to_best:.3f}s"
        )

    if initial is not None:
        if all(c.check(initial) for c in constraints):
            record(initial)
        else:
            logger.warning("Initial incumbent violates a constraint; ignored")

    stack: List[Tuple[tuple, Optional[Tuple[int, bool]]]] = [(state.snapshot(), None)]
    timed_out = False
    while stack:
        if time_limit is not None and elapsed() >= time_limit:
            timed_out = True
            break
        snapshot, decision = stack.pop()
        state.restore(snapshot)
        try:
            if report.best_size is not None:
                state.k.set_max(report.best_size - 1)
            if decision is not None:
                vertex, include = decision
                single = VertexSet.from_bits(graph.n, 1 << vertex)
                if include:
                    state.s.include(single)
                else:
                    state.s.exclude(single)
        except DomainWipeout:
            continue
        if not fixpoint(constraints, state):
            continue

        if state.s.is_fixed:
            selection = state.s.lb
            if all(c.check(selection) for c in constraints):
                if report.best_size is None or len(selection) < report.best_size:
                    record(selection)
            else:
                logger.warning(f"Propagation accepted an invalid assignment {selection}")
            continue

        undecided = state.s.undecided
        vertex = next(v for v in order if v in undecided)
        report.nodes += 1
        snapshot = state.snapshot()
        stack.append((snapshot, (vertex, False)))
        stack.append((snapshot, (vertex, True)))

    report.complete = not timed_out
    report.total_time = elapsed()
    logger.info(
        f"Search {'complete' if report.complete else 'interrupted'}: "
        f"best={report.best_size} nodes={report.nodes} time={report.total_time:.3f}s"
    )
    return report
