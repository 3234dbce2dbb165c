"""Phase dynamics models."""
from typing import Literal, Optional, Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from app import config

TWO_PI = 2.0 * np.pi

# Oscillator phases in radians, reduced to [0, 2π).
PhaseConfig = np.ndarray

Termination = Literal["gradient-converged", "time-limit", "step-failure"]


def as_phases(values: Sequence[float] | np.ndarray, n: int | None = None) -> PhaseConfig:
    """Validate a phase vector and reduce it to [0, 2π)."""
    theta = np.asarray(values, dtype=float)
    if theta.ndim != 1:
        raise ValueError("phase configuration must be one-dimensional")
    if n is not None and theta.shape[0] != n:
        raise ValueError(f"phase configuration has length {theta.shape[0]}, expected {n}")
    if not np.all(np.isfinite(theta)):
        raise ValueError("phases must be finite")
    return reduce_phases(theta)


def reduce_phases(theta: np.ndarray) -> np.ndarray:
    reduced = np.mod(theta, TWO_PI)
    # np.mod can round tiny negatives up to exactly 2π
    reduced[reduced >= TWO_PI] = 0.0
    return reduced


class PenaltyParams(BaseModel):
    """Oscillator gains: coupling K and sub-harmonic locking K_s."""

    model_config = ConfigDict(frozen=True)

    mu: float = Field(default=config.DEFAULT_MU, ge=0)
    k_coupling: float = Field(default=config.DEFAULT_K, gt=0)
    k_lock: float = Field(default=config.DEFAULT_K * config.DEFAULT_MU / 2, ge=0)

    @classmethod
    def from_mu(cls, mu: float, k_coupling: float = config.DEFAULT_K) -> "PenaltyParams":
        return cls(mu=mu, k_coupling=k_coupling, k_lock=k_coupling * mu / 2)


class IntegrationOptions(BaseModel):
    """Step control and stopping rules for the RKF45 gradient flow."""

    model_config = ConfigDict(frozen=True)

    rtol: float = Field(default=config.RTOL, gt=0)
    atol: float = Field(default=config.ATOL, gt=0)
    t_max: float = Field(default=config.T_MAX, gt=0)
    grad_tol: float = Field(default=config.GRAD_TOL, gt=0)
    record_every: int = Field(default=0, ge=0)
    initial_step: float = Field(default=config.INITIAL_STEP, gt=0)
    min_step: float = Field(default=config.MIN_STEP, gt=0)
    wrap: bool = True
    monotone: bool = True  # reject steps that raise the descended energy


class Trajectory(BaseModel):
    """Recorded states of one integration; record_every=0 keeps only endpoints."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    times: list[float]
    states: list[np.ndarray]
    energies: list[float] = []
    energies_smooth: list[float] = []
    terminated_by: Termination
    steps: int = 0
    rejected: int = 0

    @model_validator(mode="after")
    def _check_lengths(self) -> "Trajectory":
        if len(self.times) != len(self.states):
            raise ValueError("times and states differ in length")
        if self.energies and len(self.energies) != len(self.times):
            raise ValueError("energies and times differ in length")
        if any(b <= a for a, b in zip(self.times, self.times[1:])):
            raise ValueError("times must be strictly increasing")
        return self

    @property
    def final_state(self) -> np.ndarray:
        return self.states[-1]

    @property
    def final_time(self) -> float:
        return self.times[-1]


class BinarizationReport(BaseModel):
    """Distance of each phase to the nearest of {0, π}."""

    deviations: list[float]
    all_binarized: bool
    max_deviation: float
    eps: float
