"""Run the method variants on balanced vertex cover instances."""

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field

from bench.config import BenchConfig
from bench.instances import Partition, generate_partition, instance_name, load_instance
from graphs.graph import Graph
from solver.config import Method, SolverConfig
from solver.engine import minimize_search
from solver.propagator import build_model

logger = logging.getLogger(__name__)


class RunRecord(BaseModel):
    """One row of the report; ``gap`` is relative to the best cover of the same instance and b."""

    model_config = ConfigDict(use_enum_values=True)

    instance: str = Field(..., description="Instance name")
    method: Method = Field(..., description="Propagation method")
    solved: bool = Field(..., description="Search tree exhausted")
    best: Optional[int] = Field(default=None, ge=0, description="Best cover size found")
    gap: Optional[int] = Field(default=None, ge=0, description="best minus batch best")
    balance: Optional[int] = Field(
        default=None, ge=0, description="Balance tolerance b; gaps compare runs with the same b"
    )
    time_to_best_s: float = Field(default=0.0, ge=0)
    nodes_to_best: int = Field(default=0, ge=0)
    total_nodes: int = Field(default=0, ge=0)
    total_time_s: float = Field(default=0.0, ge=0)


def run_instance(
    graph: Graph,
    name: str,
    method: Method | str,
    partition: Optional[Partition],
    b: Optional[int],
    time_limit: Optional[float] = SolverConfig.DESK_TIME_LIMIT,
    node_limit: Optional[int] = None,
) -> RunRecord:
    """Minimise the cover of ``graph`` under the balance constraint with one method."""
    method = Method(method)
    state, model = build_model(graph, method, partition, b, node_limit)
    seed_cover = graph.vertices()
    initial = seed_cover if all(c.check(seed_cover) for c in model) else None

    logger.info(f"Running {name} with {method.value} (b={b}, limit={time_limit}s)")
    report = minimize_search(state, model, graph, initial=initial, time_limit=time_limit)
    return RunRecord(
        instance=name,
        method=method,
        balance=b,
        solved=report.complete,
        best=report.best_size,
        time_to_best_s=report.time_to_best,
        nodes_to_best=report.nodes_to_best,
        total_nodes=report.nodes,
        total_time_s=report.total_time,
    )


def run_benchmark(config: BenchConfig) -> RunRecord:
    """Load the instance of ``config``, draw its partition and run the method."""
    parsed = load_instance(config.instance, config.format)
    graph = parsed.graph
    partition = generate_partition(graph.n, seed=config.seed)
    return run_instance(
        graph,
        instance_name(config.instance),
        config.method,
        partition,
        config.resolve_balance(graph.n),
        time_limit=config.time_limit,
        node_limit=config.node_limit,
    )


def fill_gaps(records: Iterable[RunRecord]) -> List[RunRecord]:
    """Set each record's gap against the smallest cover found for its instance and b."""
    records = list(records)
    best: Dict[Tuple[str, Optional[int]], int] = {}
    for record in records:
        if record.best is not None:
            key = (record.instance, record.balance)
            best[key] = min(best.get(key, record.best), record.best)
    return [
        record.model_copy(
            update={
                "gap": None
                if record.best is None
                else record.best - best[(record.instance, record.balance)]
            }
        )
        for record in records
    ]


def run_batch(configs: Sequence[BenchConfig], workers: int = 1) -> List[RunRecord]:
    """Run every config in isolation, in a process pool when ``workers`` > 1."""
    if workers > 1 and len(configs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            records = list(executor.map(run_benchmark, configs))
    else:
        records = [run_benchmark(config) for config in configs]
    return fill_gaps(records)


def compare_methods(
    graph: Graph,
    name: str,
    methods: Sequence[Method | str],
    b: int,
    seed: int = 0,
    time_limit: Optional[float] = SolverConfig.DESK_TIME_LIMIT,
    node_limit: Optional[int] = None,
) -> List[RunRecord]:
    """Run several methods on one in-memory graph and partition."""
    partition = generate_partition(graph.n, seed=seed)
    records = [
        run_instance(graph, name, method, partition, b, time_limit, node_limit)
        for method in methods
    ]
    return fill_gaps(records)
