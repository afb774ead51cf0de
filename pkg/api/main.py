"""FastAPI application exposing the vertex cover toolkit."""

import logging
import os
from dataclasses import asdict
from datetime import datetime

import networkx
import numpy
import pydantic
from dotenv import load_dotenv
from fastapi import FastAPI, HTTPException, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from api.schemas import (
    ErrorResponse,
    GraphPayload,
    HealthResponse,
    KernelRequest,
    KernelResponse,
    MethodInfo,
    PropagateRequest,
    PropagateResponse,
    SolveRequest,
    SolveResponse,
)
from graphs.graph import Graph, VertexSet
from graphs.io import parse_dimacs
from kernels.buss import buss_kernel
from kernels.crown import exhaustive_crown_kernel
from kernels.rigid import rigid_crown_kernel
from solver.config import Method, MethodConfig, get_solver_config
from solver.constraints import post_cardinality, post_edge_clauses
from solver.domains import DomainWipeout, IntDomain, PropagationState, SetDomain
from solver.engine import fixpoint
from solver.propagator import VertexCoverPropagator
from solver.search import branch_and_bound_vc

load_dotenv()

# Configure logging
logging.basicConfig(
    level=getattr(logging, os.getenv("LOG_LEVEL", "INFO")),
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s"
)
logger = logging.getLogger(__name__)

VERSION = "0.1.0"

app = FastAPI(
    title="Vertex Cover Kernels API",
    description="Kernelization, exact search and VertexCover constraint propagation",
    version=VERSION,
    docs_url="/docs",
    redoc_url="/redoc"
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

settings = get_solver_config()


def _error_body(error: str, detail: str) -> dict:
    return ErrorResponse(
        error=error, detail=detail, timestamp=datetime.now().isoformat()
    ).model_dump()


@app.exception_handler(HTTPException)
async def http_exception_handler(request: Request, exc: HTTPException):
    """Handle HTTP exceptions."""
    return JSONResponse(status_code=exc.status_code, content=_error_body(exc.detail, str(exc)))


@app.exception_handler(ValueError)
async def value_error_handler(request: Request, exc: ValueError):
    """Malformed graphs and out-of-range vertices."""
    logger.info(f"Rejected request: {exc}")
    return JSONResponse(status_code=422, content=_error_body("Invalid input", str(exc)))


@app.exception_handler(Exception)
async def general_exception_handler(request: Request, exc: Exception):
    """Handle general exceptions."""
    logger.error(f"Unexpected error: {exc}", exc_info=True)
    return JSONResponse(
        status_code=500,
        content=_error_body(
            "Internal server error", "An unexpected error occurred. Please try again later."
        ),
    )


def to_graph(payload: GraphPayload) -> Graph:
    if payload.dimacs is not None:
        return parse_dimacs(payload.dimacs).graph
    return Graph(payload.n, payload.edges)


@app.get("/")
async def root():
    """Root endpoint."""
    return {
        "message": "Vertex Cover Kernels API",
        "version": VERSION,
        "docs": "/docs",
        "health": "/health"
    }


@app.get("/health", response_model=HealthResponse)
async def health_check():
    """Health check endpoint."""
    return HealthResponse(
        status="healthy",
        timestamp=datetime.now().isoformat(),
        version=VERSION,
        components={
            "networkx": networkx.__version__,
            "numpy": numpy.__version__,
            "pydantic": pydantic.VERSION,
        },
    )


@app.get("/methods", response_model=list[MethodInfo])
async def list_methods():
    """The five propagation methods and their stages."""
    configs = [MethodConfig.for_method(m, settings["node_limit"]) for m in Method]
    return [
        MethodInfo(name=c.variant.value, node_limit=c.node_limit, stages=c.stages())
        for c in configs
    ]


@app.post("/kernelize", response_model=KernelResponse)
def kernelize(request: KernelRequest):
    """Apply one kernel and report the partition it finds."""
    graph = to_graph(request.graph)
    logger.info(f"Kernelize {request.kind}: n={graph.n} m={graph.m} k={request.k}")
    if request.kind == "buss":
        result = buss_kernel(graph, request.k)
        forced, restricted, indifferent = result.forced, result.restricted, result.indifferent
        residual, feasible = result.residual, not result.infeasible
    elif request.kind == "crown":
        reduction = exhaustive_crown_kernel(graph, request.k)
        forced, restricted = reduction.cover, graph.empty_set()
        indifferent, residual = reduction.discarded, reduction.residual
        feasible = not reduction.infeasible
    else:
        result = rigid_crown_kernel(graph)
        forced, restricted, indifferent = result.forced, result.restricted, result.indifferent
        residual, feasible = result.residual, True
    return KernelResponse(
        kind=request.kind,
        feasible=feasible,
        forced=forced.to_list(),
        restricted=restricted.to_list(),
        indifferent=indifferent.to_list(),
        residual_vertices=list(residual.to_parent),
        residual_edges=residual.m,
    )


@app.post("/solve", response_model=SolveResponse)
def solve(request: SolveRequest):
    """Minimum vertex cover by branch & bound within a node budget."""
    graph = to_graph(request.graph)
    node_limit = request.node_limit if request.node_limit is not None else settings["node_limit"]
    outcome = branch_and_bound_vc(graph, node_limit=node_limit)
    logger.info(
        f"Solved n={graph.n}: size {outcome.size}, optimal={outcome.optimal}, "
        f"{outcome.nodes_explored} nodes"
    )
    return SolveResponse(
        cover=outcome.cover.to_list(),
        size=outcome.size,
        optimal=outcome.optimal,
        nodes=outcome.nodes_explored,
        lower_bound=outcome.lower_bound_at_root,
    )


@app.post("/propagate", response_model=PropagateResponse)
def propagate(request: PropagateRequest):
    """Run the chosen method to a fixpoint on the given domains."""
    graph = to_graph(request.graph)
    lb = VertexSet(graph.n, request.lb)
    ub = graph.vertices() if request.ub is None else VertexSet(graph.n, request.ub)
    k_max = graph.n if request.k_max is None else request.k_max
    config = MethodConfig.for_method(request.method, request.node_limit)

    try:
        state = PropagationState(s=SetDomain(lb, ub), k=IntDomain(request.k_min, k_max))
    except DomainWipeout:
        return PropagateResponse(failed=True)

    model = []
    propagator = None
    if config.uses_propagator:
        propagator = VertexCoverPropagator(graph, config)
        model.append(propagator)
    else:
        post_edge_clauses(model, graph)
    post_cardinality(model)

    if not fixpoint(model, state):
        return PropagateResponse(failed=True)
    return PropagateResponse(
        failed=False,
        lb=state.s.lb.to_list(),
        ub=state.s.ub.to_list(),
        k_min=state.k.min,
        k_max=state.k.max,
        stats=asdict(propagator.stats) if propagator else {},
    )


if __name__ == "__main__":
    import uvicorn

    port = int(os.getenv("PORT", 8000))
    logger.info(f"Starting Vertex Cover Kernels API on port {port}")
    uvicorn.run(
        "api.main:app",
        host="0.0.0.0",
        port=port,
        reload=True,
        log_level=os.getenv("LOG_LEVEL", "info").lower()
    )
