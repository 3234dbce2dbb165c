"""Coupling function model."""
from typing import Callable, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict

ArrayFn = Callable[[np.ndarray], np.ndarray]


class CouplingFunction(BaseModel):
    """Even, 2π-periodic coupling g: S¹ → [-1, 1] together with its derivative."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    name: str
    value_fn: ArrayFn
    deriv_fn: ArrayFn
    is_smooth_everywhere: bool = True
    coefficients: Optional[tuple[float, ...]] = None  # a_0..a_k for cosine series
    approximation_error: float = 0.0  # max grid deviation from the source coupling

    def eval(self, x):
        return self.value_fn(np.asarray(x, dtype=float))

    def deriv(self, x):
        return self.deriv_fn(np.asarray(x, dtype=float))

    def __call__(self, x):
        return self.eval(x)


class ClassGReport(BaseModel):
    """Numerical check of the coupling-class properties on a grid."""

    name: str
    even: bool
    periodic: bool
    max_at_zero: bool
    min_at_pi: bool
    in_range: bool
    differentiable: bool
    passed: bool
    value_at_zero: float
    value_at_pi: float
    max_derivative_jump: float
    boundary_tolerance: float
    notes: list[str] = []
