"""Ising model and spin configuration."""
import math
from typing import Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationInfo, field_validator

# A spin configuration is an int8 vector with entries exactly +1 or -1.
SpinConfig = np.ndarray

Coupling = tuple[int, int, float]


class IsingModel(BaseModel):
    """Symmetric couplings J_ij stored once per unordered pair (i < j), no field term."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(gt=0)
    couplings: tuple[Coupling, ...] = ()

    @field_validator("couplings")
    @classmethod
    def canonical_couplings(cls, couplings: tuple[Coupling, ...], info: ValidationInfo) -> tuple[Coupling, ...]:
        n = info.data.get("n")
        if n is None:
            return couplings
        merged: dict[tuple[int, int], float] = {}
        for i, j, value in couplings:
            if i == j:
                raise ValueError(f"diagonal coupling J_{i}{i} is not allowed")
            key = (min(i, j), max(i, j))
            if key[0] < 0 or key[1] >= n:
                raise ValueError(f"coupling {key} out of range for n={n}")
            if not math.isfinite(value):
                raise ValueError(f"non-finite coupling at {key}")
            if key in merged:
                raise ValueError(f"coupling {key} given twice")
            merged[key] = float(value)
        return tuple((i, j, value) for (i, j), value in sorted(merged.items()))

    def arrays(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Coupling endpoints and values as numpy arrays (i, j, J)."""
        if not self.couplings:
            return np.zeros(0, dtype=np.intp), np.zeros(0, dtype=np.intp), np.zeros(0)
        i, j, values = zip(*self.couplings)
        return np.array(i, dtype=np.intp), np.array(j, dtype=np.intp), np.array(values, dtype=float)


def as_spins(values: Sequence[int] | np.ndarray, n: int | None = None) -> SpinConfig:
    """Validate and convert to a spin vector."""
    spins = np.asarray(values)
    if spins.ndim != 1:
        raise ValueError("spin configuration must be one-dimensional")
    if n is not None and spins.shape[0] != n:
        raise ValueError(f"spin configuration has length {spins.shape[0]}, expected {n}")
    if not np.all(np.abs(spins) == 1):
        raise ValueError("spins must be exactly +1 or -1")
    return spins.astype(np.int8)


class MaxCutSolution(BaseModel):
    """Exact max-cut value with one maximizer (spin of vertex 0 fixed to +1)."""

    value: float
    spins: list[int]
    unique: bool
    optimal_count: int
