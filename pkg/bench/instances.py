"""Instances and balanced partitions for the benchmark."""

import logging
import re
from pathlib import Path
from typing import Tuple, Union

import networkx as nx
import numpy as np

from graphs.graph import Graph
from graphs.io import ParsedGraph, load_graph
from solver.config import SolverConfig

logger = logging.getLogger(__name__)

Partition = Tuple[Tuple[int, ...], ...]


def generate_partition(
    n: int, parts: int = SolverConfig.PARTITION_PARTS, seed: int = 0
) -> Partition:
    """Uniformly random partition of 0..n-1 into ``parts`` blocks of near-equal size.

    The vertices are shuffled with numpy's PCG64 generator seeded by
    ``seed`` and cut into consecutive chunks; sizes differ by at most one,
    larger chunks first. With fewer vertices than parts the last blocks are empty.
    """
    if parts < 1:
        raise ValueError(f"need at least one part, got {parts}")
    order = np.random.default_rng(seed).permutation(n)
    partition = tuple(
        tuple(sorted(int(v) for v in chunk)) for chunk in np.array_split(order, parts)
    )
    logger.debug(f"Partition of {n} vertices, seed {seed}: sizes {[len(p) for p in partition]}")
    return partition


def random_instance(n: int, m: int, seed: int = 0) -> Graph:
    """Uniform random graph with ``n`` vertices and ``m`` edges."""
    return Graph.from_networkx(nx.gnm_random_graph(n, m, seed=seed))


def load_instance(path: Union[str, Path], fmt: str = "dimacs") -> ParsedGraph:
    return load_graph(path, fmt)


def instance_name(path: Union[str, Path]) -> str:
    return Path(path).stem


def instance_class(name: str) -> str:
    """Family of an instance: its name without trailing numbering (``frb30-15-1`` -> ``frb30-15``)."""
    stripped = re.sub(r"[-_.]*\d+$", "", name)
    return stripped or name