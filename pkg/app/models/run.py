"""Run configuration and result records."""
import hashlib
from typing import Literal, Optional

from pydantic import BaseModel, Field, model_validator

from app import config
from app.models.dynamics import BinarizationReport, Termination
from app.models.rounding import Certificate

GeneratorName = Literal["er", "cubic", "hypercube"]


def default_mu(coupling: str) -> float:
    """Penalty used when a run does not set one: only the cosine flow is penalized."""
    return config.DEFAULT_MU if coupling.strip() == "cos" else config.DEFAULT_MU_GENERAL


class RunConfig(BaseModel):
    """Every parameter of a solve run; serialized verbatim into its artifacts."""

    graph_file: Optional[str] = None
    generator: Optional[GeneratorName] = None
    n: Optional[int] = Field(default=None, gt=0)
    p: Optional[float] = Field(default=None, ge=0, le=1)
    d: Optional[int] = Field(default=None, ge=1)
    graph_seed: Optional[int] = None

    coupling: str = "cos"
    mu: Optional[float] = Field(default=None, ge=0)  # None: per-coupling default
    k_coupling: float = Field(default=config.DEFAULT_K, gt=0)
    rtol: float = Field(default=config.RTOL, gt=0)
    atol: float = Field(default=config.ATOL, gt=0)
    grad_tol: float = Field(default=config.GRAD_TOL, gt=0)
    t_max: float = Field(default=config.T_MAX, gt=0)
    record_every: int = Field(default=0, ge=0)

    restarts: int = Field(default=10, ge=1)
    seed: int = Field(default=0, ge=0)
    rounding_trials: int = Field(default=config.ROUNDING_TRIALS, ge=0)
    eps: float = Field(default=config.BINARIZATION_EPS, gt=0)

    output: Optional[str] = None
    trajectory_csv: Optional[str] = None

    @model_validator(mode="after")
    def _one_graph_source(self) -> "RunConfig":
        if self.graph_file and self.generator:
            raise ValueError("give either a graph file or a generator, not both")
        return self

    @model_validator(mode="after")
    def _default_mu(self) -> "RunConfig":
        if self.mu is None:
            self.mu = default_mu(self.coupling)
        return self

    def restart_seed(self, index: int) -> int:
        return self.seed + index

    def config_hash(self) -> str:
        return hashlib.sha256(self.model_dump_json().encode("utf-8")).hexdigest()


class RestartResult(BaseModel):
    restart: int
    seed: int
    terminated_by: Termination
    final_time: float
    steps: int
    energy_exact: float
    energy_smooth: float
    sign_cut: float
    line_cut: float
    cut: float
    spins: list[int]
    phases: list[float]
    binarization: BinarizationReport
    certificate: Optional[Certificate] = None


class SolveResult(BaseModel):
    config: RunConfig
    config_hash: str
    created_at: str
    n: int
    num_edges: int
    total_weight: float
    best: RestartResult
    restarts: list[RestartResult]


class BenchRow(BaseModel):
    instance: str
    coupling: str
    mu: float
    best_cut: float
    mean_cut: float
    binarization_rate: float
    wall_time: float
    config_hash: str
