"""Energies, gradients and RKF45 gradient-flow integration of oscillator phases."""
import logging
from typing import Callable, Optional

import numpy as np

from app.controllers.coupling_controller import circular_distance
from app.models import (
    BinarizationReport,
    CouplingFunction,
    Graph,
    IntegrationOptions,
    IsingModel,
    PenaltyParams,
    Trajectory,
)
from app.models.dynamics import TWO_PI, as_phases, reduce_phases

logger = logging.getLogger(__name__)

VectorField = Callable[[np.ndarray], np.ndarray]
EnergyFn = Callable[[np.ndarray], float]

# Runge-Kutta-Fehlberg 4(5) tableau; the 4th order solution is propagated
RKF45_A = (
    (),
    (1 / 4,),
    (3 / 32, 9 / 32),
    (1932 / 2197, -7200 / 2197, 7296 / 2197),
    (439 / 216, -8.0, 3680 / 513, -845 / 4104),
    (-8 / 27, 2.0, -3544 / 2565, 1859 / 4104, -11 / 40),
)
RKF45_B4 = np.array([25 / 216, 0.0, 1408 / 2565, 2197 / 4104, -1 / 5, 0.0])
RKF45_ERR = np.array([1 / 360, 0.0, -128 / 4275, -2197 / 75240, 1 / 50, 2 / 55])

SAFETY = 0.9
MIN_FACTOR = 0.2
MAX_FACTOR = 5.0
DESCENT_SLACK = 16 * np.finfo(float).eps  # relative, rounding level
STABILITY_BOUND = 2.0  # h·λ inside the real stability interval of the 4th order step


def _pair_sum(n: int, i: np.ndarray, j: np.ndarray, terms: np.ndarray) -> np.ndarray:
    """Scatter antisymmetric pair terms: +t onto i and -t onto j."""
    return np.bincount(i, terms, minlength=n) - np.bincount(j, terms, minlength=n)


def penalty_energy(theta: np.ndarray, mu: float) -> float:
    """(μ/2) Σ sin²θ_i."""
    return float(0.5 * mu * np.sum(np.sin(theta) ** 2))


def energy_penalized(theta: np.ndarray, model: IsingModel, mu: float) -> float:
    """L(θ; J, μ) = -Σ_{i<j} J_ij cos(θ_i - θ_j) + (μ/2) Σ sin²θ_i."""
    if mu < 0:
        raise ValueError(f"penalty coefficient must be non-negative, got {mu}")
    theta = as_phases(theta, model.n)
    i, j, values = model.arrays()
    return float(-np.sum(values * np.cos(theta[i] - theta[j]))) + penalty_energy(theta, mu)


def grad_penalized(theta: np.ndarray, model: IsingModel, mu: float) -> np.ndarray:
    """∂L/∂θ_i = Σ_{j≠i} J_ij sin(θ_i - θ_j) + (μ/2) sin 2θ_i."""
    theta = as_phases(theta, model.n)
    i, j, values = model.arrays()
    coupling = _pair_sum(model.n, i, j, values * np.sin(theta[i] - theta[j]))
    return coupling + 0.5 * mu * np.sin(2.0 * theta)


def oim_rhs(theta: np.ndarray, model: IsingModel, params: PenaltyParams) -> np.ndarray:
    """dθ_i/dt = -K Σ_{j≠i} J_ij sin(θ_i - θ_j) - K_s sin 2θ_i."""
    theta = as_phases(theta, model.n)
    i, j, values = model.arrays()
    coupling = _pair_sum(model.n, i, j, values * np.sin(theta[i] - theta[j]))
    return -params.k_coupling * coupling - params.k_lock * np.sin(2.0 * theta)


def energy_general(theta: np.ndarray, graph: Graph, f: CouplingFunction) -> float:
    """L(θ; A, g) = Σ over edges of w_ij g(θ_i - θ_j)."""
    theta = as_phases(theta, graph.n)
    u, v, w = graph.arrays()
    return float(np.sum(w * f.eval(theta[u] - theta[v])))


def grad_general(theta: np.ndarray, graph: Graph, f: CouplingFunction) -> np.ndarray:
    """∂L/∂θ_i = Σ_{j≠i} w_ij g'(θ_i - θ_j), using that g' is odd."""
    theta = as_phases(theta, graph.n)
    u, v, w = graph.arrays()
    return _pair_sum(graph.n, u, v, w * f.deriv(theta[u] - theta[v]))


def penalized_field(model: IsingModel, params: PenaltyParams) -> VectorField:
    """OIM vector field with the coupling arrays bound once."""
    i, j, values = model.arrays()
    n = model.n
    k, k_lock = params.k_coupling, params.k_lock

    def field(theta: np.ndarray) -> np.ndarray:
        coupling = _pair_sum(n, i, j, values * np.sin(theta[i] - theta[j]))
        return -k * coupling - k_lock * np.sin(2.0 * theta)

    return field


def general_field(graph: Graph, f: CouplingFunction, mu: float = 0.0, k_coupling: float = 1.0) -> VectorField:
    """-K (∇L(θ; A, g) + (μ/2) sin 2θ) with the edge arrays bound once."""
    if not f.is_smooth_everywhere:
        logger.warning(f"coupling {f.name} has a corner; the flow follows a subgradient there")
    u, v, w = graph.arrays()
    n = graph.n

    def field(theta: np.ndarray) -> np.ndarray:
        grad = _pair_sum(n, u, v, w * f.deriv(theta[u] - theta[v]))
        return -k_coupling * (grad + 0.5 * mu * np.sin(2.0 * theta))

    return field


def _stability_cap(dk: np.ndarray, dy: np.ndarray) -> Optional[float]:
    """Largest step keeping the locally estimated stiffness ‖Δfield‖/‖Δθ‖ stable."""
    dy_norm = float(np.linalg.norm(dy))
    dk_norm = float(np.linalg.norm(dk))
    if dy_norm == 0.0 or dk_norm == 0.0 or not np.isfinite(dk_norm / dy_norm):
        return None
    return STABILITY_BOUND * dy_norm / dk_norm


def random_phases(n: int, seed: Optional[int | list[int]] = None) -> np.ndarray:
    """Independent uniform phases on [0, 2π)."""
    return np.random.default_rng(seed).uniform(0.0, TWO_PI, size=n)


def align_phases(theta: np.ndarray, labels: Optional[np.ndarray] = None) -> np.ndarray:
    """Rotate phases so the best-fitting {0, π} axis sits at 0.

    With component labels each group is rotated on its own; an isolated
    vertex then lands exactly on 0.
    """
    theta = np.asarray(theta, dtype=float)
    if labels is None:
        labels = np.zeros(theta.shape[0], dtype=np.intp)
    labels = np.asarray(labels)
    phasors = np.exp(2j * theta)
    sums = np.bincount(labels, phasors.real) + 1j * np.bincount(labels, phasors.imag)
    axis = 0.5 * np.angle(sums)
    return reduce_phases(theta - axis[labels])


def detect_binarization(theta: np.ndarray, eps: float) -> BinarizationReport:
    """Per-oscillator circular distance to the nearest of {0, π}."""
    if eps <= 0:
        raise ValueError(f"eps must be positive, got {eps}")
    d = circular_distance(theta, 0.0)
    deviations = np.minimum(d, np.pi - d)
    max_dev = float(np.max(deviations)) if deviations.size else 0.0
    return BinarizationReport(
        deviations=deviations.tolist(),
        all_binarized=max_dev <= eps,
        max_deviation=max_dev,
        eps=eps,
    )


def integrate_rkf45(
    field: VectorField,
    theta0: np.ndarray,
    opts: IntegrationOptions = IntegrationOptions(),
    energy: Optional[EnergyFn] = None,
    energy_smooth: Optional[EnergyFn] = None,
) -> Trajectory:
    """Adaptive RKF45 flow until ‖field‖∞ <= grad_tol, t >= t_max or step underflow.

    The error of a step is measured against atol + rtol·|increment|, which does
    not depend on where the phases wrap. With opts.monotone, a step that raises
    the descended energy (energy_smooth when given, else energy) beyond
    rounding is rejected like an inaccurate one. After each accepted step the
    next one is capped by the stiffness seen between the last stage and the
    new point, so loose atol cannot let a stiff mode oscillate.
    """
    y = as_phases(theta0) if opts.wrap else np.array(theta0, dtype=float)
    descent = energy_smooth if energy_smooth is not None else energy
    check_descent = opts.monotone and descent is not None

    times, states, energies, energies_smooth = [], [], [], []

    def record(t: float, state: np.ndarray) -> None:
        times.append(t)
        states.append(state.copy())
        if energy is not None:
            energies.append(float(energy(state)))
        if energy_smooth is not None:
            energies_smooth.append(float(energy_smooth(state)))

    t = 0.0
    h = min(opts.initial_step, opts.t_max)
    steps = rejected = 0
    record(t, y)
    k1 = field(y)
    e_current = float(descent(y)) if check_descent else 0.0
    terminated_by = None
    if np.max(np.abs(k1), initial=0.0) <= opts.grad_tol:
        terminated_by = "gradient-converged"

    stages = np.empty((6,) + y.shape)
    just_rejected = False
    h_cap = None
    while terminated_by is None:
        h = min(h, opts.t_max - t)
        stages[0] = k1
        for s in range(1, 6):
            arg = y + h * np.tensordot(RKF45_A[s], stages[:s], axes=1)
            stages[s] = field(arg)
        # stage 5 sits at t + h, like the next first stage
        y_end_stage = arg
        increment = h * np.tensordot(RKF45_B4, stages, axes=1)
        err = h * np.tensordot(RKF45_ERR, stages, axes=1)
        scale = opts.atol + opts.rtol * np.abs(increment)
        err_norm = float(np.max(np.abs(err) / scale, initial=0.0))
        accepted = bool(np.isfinite(err_norm) and err_norm <= 1.0)

        y_new = y + increment
        if accepted and check_descent:
            e_new = float(descent(y_new))
            if e_new > e_current + DESCENT_SLACK * (1.0 + abs(e_current)):
                accepted = False
                err_norm = max(err_norm, 2.0)

        if accepted:
            t += h
            steps += 1
            y = reduce_phases(y_new) if opts.wrap else y_new
            if check_descent:
                e_current = e_new
            k1 = field(y)
            h_cap = _stability_cap(k1 - stages[4], y_new - y_end_stage)
            if np.max(np.abs(k1), initial=0.0) <= opts.grad_tol:
                terminated_by = "gradient-converged"
            elif t >= opts.t_max or opts.t_max - t < opts.min_step:
                terminated_by = "time-limit"
            if terminated_by is not None or (opts.record_every and steps % opts.record_every == 0):
                record(t, y)
        else:
            rejected += 1

        if not np.isfinite(err_norm):
            factor = MIN_FACTOR
        elif err_norm == 0.0:
            factor = MAX_FACTOR
        else:
            factor = min(MAX_FACTOR, max(MIN_FACTOR, SAFETY * err_norm ** -0.2))
        if accepted and just_rejected:
            # no growth right after a rejection
            factor = min(factor, 1.0)
        just_rejected = not accepted
        h *= factor
        if accepted and h_cap is not None:
            # a corner crossing can fake a huge stiffness; shrink at most MIN_FACTOR
            h = min(h, max(h_cap, MIN_FACTOR * h))
        if terminated_by is None and h < opts.min_step:
            terminated_by = "step-failure"
            logger.warning(f"step size underflow at t={t:.6g} after {steps} steps")
            if times[-1] < t:
                record(t, y)

    logger.debug(f"integration ended by {terminated_by} at t={t:.6g}: {steps} steps, {rejected} rejected")
    return Trajectory(
        times=times,
        states=states,
        energies=energies,
        energies_smooth=energies_smooth,
        terminated_by=terminated_by,
        steps=steps,
        rejected=rejected,
    )
