"""Pydantic schemas for API requests and responses."""

from typing import Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, Field, model_validator

from solver.config import Method


class GraphPayload(BaseModel):
    """A graph given either as 0-based edges over n vertices or as DIMACS text."""
    n: Optional[int] = Field(None, ge=0, le=100_000, description="Vertex count")
    edges: List[Tuple[int, int]] = Field(default_factory=list, description="0-based edges")
    dimacs: Optional[str] = Field(None, description="DIMACS 'p edge' text")

    @model_validator(mode="after")
    def check_source(self) -> "GraphPayload":
        if (self.n is None) == (self.dimacs is None):
            raise ValueError("give either n (with edges) or dimacs")
        return self


class KernelRequest(BaseModel):
    """Request schema for kernelize endpoint."""
    graph: GraphPayload
    kind: Literal["buss", "crown", "rigid"] = Field("buss", description="Kernel to apply")
    k: Optional[int] = Field(None, ge=0, description="Budget (buss and crown)")

    @model_validator(mode="after")
    def check_budget(self) -> "KernelRequest":
        if self.kind != "rigid" and self.k is None:
            raise ValueError(f"kernel {self.kind} needs a budget k")
        return self


class KernelResponse(BaseModel):
    """Response schema for kernelize endpoint."""
    kind: str = Field(..., description="Kernel applied")
    feasible: bool = Field(..., description="False when the budget is proven too small")
    forced: List[int] = Field(..., description="Vertices in every protected cover")
    restricted: List[int] = Field(..., description="Vertices in no protected cover")
    indifferent: List[int] = Field(..., description="Vertices safe to drop")
    residual_vertices: List[int] = Field(..., description="Vertices of the residual graph")
    residual_edges: int = Field(..., description="Edges of the residual graph")


class SolveRequest(BaseModel):
    """Request schema for solve endpoint."""
    graph: GraphPayload
    node_limit: Optional[int] = Field(None, ge=0, description="Branch & bound node budget")


class SolveResponse(BaseModel):
    """Response schema for solve endpoint."""
    cover: List[int] = Field(..., description="Best vertex cover found")
    size: int = Field(..., description="Size of the cover")
    optimal: bool = Field(..., description="Whether the search proved optimality")
    nodes: int = Field(..., description="Branching decisions made")
    lower_bound: int = Field(..., description="Clique cover lower bound at the root")


class PropagateRequest(BaseModel):
    """Request schema for propagate endpoint."""
    graph: GraphPayload
    method: Method = Field(Method.FULL, description="Propagation method")
    lb: List[int] = Field(default_factory=list, description="Vertices required in S")
    ub: Optional[List[int]] = Field(None, description="Vertices allowed in S (default all)")
    k_min: int = Field(0, ge=0, description="Lower bound of K")
    k_max: Optional[int] = Field(None, ge=0, description="Upper bound of K (default n)")
    node_limit: Optional[int] = Field(None, ge=0, description="Witness node budget")


class PropagateResponse(BaseModel):
    """Response schema for propagate endpoint."""
    failed: bool = Field(..., description="True when the domains admit no cover")
    lb: List[int] = Field(default_factory=list, description="Pruned required set")
    ub: List[int] = Field(default_factory=list, description="Pruned possible set")
    k_min: Optional[int] = Field(None, description="Pruned lower bound of K")
    k_max: Optional[int] = Field(None, description="Pruned upper bound of K")
    stats: Dict[str, int] = Field(default_factory=dict, description="Propagator counters")


class MethodInfo(BaseModel):
    """One propagation method variant."""
    name: str = Field(..., description="CLI/API identifier")
    node_limit: int = Field(..., description="Witness node budget")
    stages: List[str] = Field(..., description="Enabled propagation stages")


class HealthResponse(BaseModel):
    """Response schema for health check endpoint."""
    status: str = Field(..., description="Service status")
    timestamp: str = Field(..., description="Response timestamp")
    version: str = Field(..., description="API version")
    components: Dict[str, str] = Field(..., description="Library versions in use")


class ErrorResponse(BaseModel):
    """Response schema for error responses."""
    error: str = Field(..., description="Error message")
    detail: Optional[str] = Field(None, description="Additional error details")
    timestamp: str = Field(..., description="Error timestamp")
