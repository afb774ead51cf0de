"""Benchmark run configuration."""

from pathlib import Path
from typing import Literal, Optional

from pydantic import BaseModel, Field, model_validator

from solver.config import Method, SolverConfig


class BenchConfig(BaseModel):
    """One (instance, method) run of the balanced vertex cover benchmark."""

    instance: Path = Field(..., description="Instance file")
    format: Literal["dimacs", "edgelist"] = Field(
        default="dimacs", description="Instance file format"
    )
    method: Method = Field(default=Method.FULL, description="Propagation method")
    balance: Optional[int] = Field(
        default=None, ge=0, description="Absolute balance tolerance b"
    )
    balance_ratio: Optional[float] = Field(
        default=None, gt=0, description="Balance tolerance as a fraction of n"
    )
    seed: int = Field(default=0, ge=0, description="Partition PRNG seed")
    time_limit: float = Field(
        default=SolverConfig.DEFAULT_TIME_LIMIT, ge=0, description="Seconds per run"
    )
    node_limit: int = Field(
        default=SolverConfig.DEFAULT_NODE_LIMIT,
        ge=0,
        description="Witness branch & bound node budget (lambda)",
    )
    out: Optional[Path] = Field(default=None, description="CSV output path")

    @model_validator(mode="after")
    def check_balance(self) -> "BenchConfig":
        if (self.balance is None) == (self.balance_ratio is None):
            raise ValueError("set exactly one of balance and balance_ratio")
        return self

    def resolve_balance(self, n: int) -> int:
        """Absolute tolerance for an instance with ``n`` vertices."""
        if self.balance is not None:
            return self.balance
        return round(self.balance_ratio * n)
