"""Solver configuration and settings."""

import logging
import os
from enum import Enum
from typing import Any, Dict

from pydantic import BaseModel, Field, model_validator

logger = logging.getLogger(__name__)


class SolverConfig:
    """Defaults for the solver and the benchmark harness."""

    # Node budget for the witness branch & bound (lambda)
    DEFAULT_NODE_LIMIT = 5000

    # Time limits, seconds
    DEFAULT_TIME_LIMIT = 300.0
    DESK_TIME_LIMIT = 5.0

    # Exhaustive oracle cut-off
    BRUTE_FORCE_MAX_N = 24

    # Balanced partition experiments
    PARTITION_PARTS = 4
    DEFAULT_BALANCE = 4


def _env_number(name: str, default, cast):
    raw = os.getenv(name)
    if raw is None or raw == "":
        return default
    try:
        return cast(raw)
    except ValueError:
        logger.warning(f"Ignoring invalid {name}={raw!r}, using {default}")
        return default


def get_solver_config() -> Dict[str, Any]:
    """Get solver configuration based on environment variables."""
    return {
        "node_limit": _env_number("VC_NODE_LIMIT", SolverConfig.DEFAULT_NODE_LIMIT, int),
        "time_limit": _env_number("VC_TIME_LIMIT", SolverConfig.DEFAULT_TIME_LIMIT, float),
        "workers": _env_number("VC_WORKERS", 1, int),
        "log_level": os.getenv("LOG_LEVEL", "INFO").upper(),
    }


class Method(str, Enum):
    """The five ways of posting the vertex cover constraint."""

    DECOMPOSITION = "decomp"
    CLIQUE_COVER = "cliquecover"
    KERNEL_PRUNING = "kernel"
    KERNEL_WITNESS = "kernelwitness"
    FULL = "full"


# Methods that never search for a witness.
NO_WITNESS_METHODS = (Method.DECOMPOSITION, Method.CLIQUE_COVER, Method.KERNEL_PRUNING)


class MethodConfig(BaseModel):
    """Which propagation stages run, and the witness node budget."""

    variant: Method = Field(..., description="Propagation method")
    node_limit: int = Field(
        default=SolverConfig.DEFAULT_NODE_LIMIT,
        ge=0,
        description="Branch & bound node budget for the witness (lambda)",
    )

    @model_validator(mode="after")
    def check_node_limit(self) -> "MethodConfig":
        if self.variant in NO_WITNESS_METHODS and self.node_limit != 0:
            raise ValueError(f"method {self.variant.value} runs with node_limit 0")
        return self

    @classmethod
    def for_method(cls, method: Method | str, node_limit: int | None = None) -> "MethodConfig":
        """Build the config of ``method``; ``node_limit`` only applies to witness methods."""
        variant = Method(method)
        if variant in NO_WITNESS_METHODS:
            return cls(variant=variant, node_limit=0)
        if node_limit is None:
            node_limit = SolverConfig.DEFAULT_NODE_LIMIT
        return cls(variant=variant, node_limit=node_limit)

    @property
    def uses_propagator(self) -> bool:
        return self.variant != Method.DECOMPOSITION

    @property
    def uses_crowns(self) -> bool:
        return self.variant not in (Method.DECOMPOSITION, Method.CLIQUE_COVER)

    @property
    def uses_rigid_crowns(self) -> bool:
        return self.uses_crowns

    @property
    def uses_witness_pruning(self) -> bool:
        return self.variant == Method.FULL

    def stages(self) -> list[str]:
        """Human-readable list of the enabled stages."""
        if not self.uses_propagator:
            return ["edge_clauses", "cardinality"]
        stages = ["neighborhood", "buss"]
        if self.uses_crowns:
            stages.append("crowns")
        if self.node_limit > 0:
            stages.append("witness_search")
        stages.append("clique_cover_bound")
        if self.uses_rigid_crowns:
            stages.append("rigid_crowns")
        if self.uses_witness_pruning:
            stages.append("witness_pruning")
        return stages
