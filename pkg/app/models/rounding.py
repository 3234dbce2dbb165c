"""Rounding and certificate models."""
from typing import Optional

from pydantic import BaseModel


class RoundingResult(BaseModel):
    spins: list[int]
    cut: float
    line_angle: float


class MonteCarloCut(BaseModel):
    trials: int
    mean: float
    standard_error: float


class Certificate(BaseModel):
    """Lower bound on the expected random-line cut of one configuration."""

    expected_cut: float
    ratio_used: float
    interval: tuple[float, float]
    lower_bound: float
    energy: float
    coupling: str
    mu: Optional[float] = None
