"""Domain models."""
from app.models.graph import Graph
from app.models.ising import IsingModel, MaxCutSolution, SpinConfig, as_spins
from app.models.coupling import ClassGReport, CouplingFunction
from app.models.dynamics import (
    BinarizationReport,
    IntegrationOptions,
    PenaltyParams,
    PhaseConfig,
    Trajectory,
    as_phases,
)
from app.models.rounding import Certificate, MonteCarloCut, RoundingResult
from app.models.run import BenchRow, RestartResult, RunConfig, SolveResult

__all__ = [
    "Graph",
    "IsingModel",
    "MaxCutSolution",
    "SpinConfig",
    "as_spins",
    "ClassGReport",
    "CouplingFunction",
    "BinarizationReport",
    "IntegrationOptions",
    "PenaltyParams",
    "PhaseConfig",
    "Trajectory",
    "as_phases",
    "Certificate",
    "MonteCarloCut",
    "RoundingResult",
    "BenchRow",
    "RestartResult",
    "RunConfig",
    "SolveResult",
]
