"""API routes."""
import math
from typing import Optional

from fastapi import APIRouter, HTTPException, Query
from pydantic import BaseModel

from app.controllers import graph_controller
from app.controllers.coupling_controller import (
    approximation_ratio,
    ratio_over_interval,
    resolve_coupling,
    validate_class_g,
)
from app.controllers.ising_controller import brute_force_maxcut
from app.controllers.solve_controller import solve
from app.models import RunConfig, SolveResult
from app.utils.graph_io import parse_edge_list, write_edge_list

router = APIRouter(prefix="/api/v1", tags=["api"])


class GraphText(BaseModel):
    edge_list: str


class SolveRequest(BaseModel):
    edge_list: str
    config: RunConfig = RunConfig()


@router.get("/ratio/{coupling}")
async def get_ratio(
    coupling: str,
    lo: Optional[float] = Query(None),
    hi: Optional[float] = Query(None),
):
    """Approximation ratio of a coupling, optionally restricted to [lo, hi]."""
    try:
        g, _ = resolve_coupling(coupling)
        report = {
            "coupling": coupling,
            "approximation_ratio": approximation_ratio(g),
            "class_g": validate_class_g(g).model_dump(),
        }
        if lo is not None or hi is not None:
            lo = 0.0 if lo is None else lo
            hi = math.pi if hi is None else hi
            report["interval"] = [lo, hi]
            report["interval_ratio"] = ratio_over_interval(g, lo, hi)
    except ValueError as e:
        raise HTTPException(status_code=422, detail=str(e)) from e
    return report


@router.get("/generate/{generator}")
async def get_generated_graph(
    generator: str,
    n: Optional[int] = Query(None),
    p: Optional[float] = Query(None),
    d: Optional[int] = Query(None),
    seed: Optional[int] = Query(None),
):
    """Generated instance as edge-list text."""
    try:
        graph = graph_controller.generate(generator, n=n, p=p, d=d, seed=seed)
    except ValueError as e:
        raise HTTPException(status_code=422, detail=str(e)) from e
    return {"n": graph.n, "edges": graph.num_edges, "edge_list": write_edge_list(graph)}


@router.post("/oracle")
async def post_oracle(body: GraphText):
    """Exact max-cut of a small instance."""
    try:
        graph = parse_edge_list(body.edge_list)
        solution = brute_force_maxcut(graph)
    except ValueError as e:
        raise HTTPException(status_code=422, detail=str(e)) from e
    return {"n": graph.n, "edges": graph.num_edges, **solution.model_dump()}


@router.post("/solve", response_model=SolveResult)
async def post_solve(body: SolveRequest):
    """Seeded multi-restart solve; file outputs are not written over HTTP."""
    try:
        resolve_coupling(body.config.coupling)
        graph = parse_edge_list(body.edge_list)
        run = body.config.model_copy(update={"output": None, "trajectory_csv": None})
        solution, _ = await solve(graph, run)
    except ValueError as e:
        raise HTTPException(status_code=422, detail=str(e)) from e
    return solution
