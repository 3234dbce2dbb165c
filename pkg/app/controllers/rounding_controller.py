"""Random-line rounding, expected cuts and lower-bound certificates."""
import logging
import math
from typing import Optional, Sequence

import numpy as np

from app.controllers.coupling_controller import circular_distance, ratio_over_interval
from app.controllers.dynamics_controller import energy_general, penalty_energy
from app.controllers.ising_controller import cut_value
from app.models import Certificate, CouplingFunction, Graph, MonteCarloCut, RoundingResult

logger = logging.getLogger(__name__)

SeedLike = Optional[int | Sequence[int]]


def expected_cut(theta: np.ndarray, graph: Graph) -> float:
    """E W_θ = Σ over edges of w_ij |θ_i - θ_j|_S¹ / π."""
    theta = np.asarray(theta, dtype=float)
    if theta.shape != (graph.n,):
        raise ValueError(f"phase vector has shape {theta.shape}, expected ({graph.n},)")
    u, v, w = graph.arrays()
    return float(np.sum(w * circular_distance(theta[u], theta[v])) / np.pi)


def _split_by_line(theta: np.ndarray, phi: float) -> np.ndarray:
    # exact incidence on the line goes to +1
    return np.where(np.cos(theta - phi) >= 0.0, 1, -1).astype(np.int8)


def random_line_round(theta: np.ndarray, graph: Graph, seed: SeedLike = None) -> RoundingResult:
    """Partition phases by a random line through the origin (normal angle uniform on [0, π))."""
    theta = np.asarray(theta, dtype=float)
    phi = float(np.random.default_rng(seed).uniform(0.0, np.pi))
    spins = _split_by_line(theta, phi)
    return RoundingResult(spins=spins.tolist(), cut=cut_value(graph, spins), line_angle=phi)


def best_line_round(theta: np.ndarray, graph: Graph, trials: int, seed: SeedLike = None) -> Optional[RoundingResult]:
    """Best of `trials` random lines; ties keep the earlier draw."""
    best = None
    base = [] if seed is None else [int(s) for s in np.atleast_1d(seed)]
    for trial in range(trials):
        result = random_line_round(theta, graph, seed=[*base, trial])
        if best is None or result.cut > best.cut:
            best = result
    return best


def monte_carlo_cut(theta: np.ndarray, graph: Graph, trials: int, seed: SeedLike = None) -> MonteCarloCut:
    """Empirical mean and standard error of the random-line cut."""
    if trials < 2:
        raise ValueError("need at least two trials for a standard error")
    theta = np.asarray(theta, dtype=float)
    u, v, w = graph.arrays()
    phis = np.random.default_rng(seed).uniform(0.0, np.pi, size=trials)
    sides = np.cos(theta[None, :] - phis[:, None]) >= 0.0
    cuts = ((sides[:, u] != sides[:, v]) * w).sum(axis=1)
    return MonteCarloCut(
        trials=trials,
        mean=float(cuts.mean()),
        standard_error=float(cuts.std(ddof=1) / math.sqrt(trials)),
    )


def edge_angle_interval(theta: np.ndarray, graph: Graph) -> tuple[float, float]:
    """Range of circular angle differences realized on the edges."""
    if not graph.edges:
        raise ValueError("graph has no edges")
    theta = np.asarray(theta, dtype=float)
    u, v, _ = graph.arrays()
    d = circular_distance(theta[u], theta[v])
    return float(d.min()), float(d.max())


def certify_lower_bound(
    theta: np.ndarray,
    graph: Graph,
    f: CouplingFunction,
    mu: Optional[float] = None,
) -> Certificate:
    """Lower bound ratio * (total_weight - L(θ)) / 2 on the expected rounded cut.

    Without mu, L is the generalized energy L(θ; A, g). With mu, the angle
    penalty (μ/2) Σ sin²θ is added to L; the bound survives because the
    penalty is non-negative. Edge weights are assumed non-negative.
    """
    if not graph.edges:
        raise ValueError("cannot certify a graph without edges")
    if abs(float(f.eval(np.pi)) + 1.0) > max(1e-9, f.approximation_error):
        raise ValueError(f"coupling {f.name} must satisfy g(π) = -1")
    theta = np.asarray(theta, dtype=float)
    lo, hi = edge_angle_interval(theta, graph)
    ratio = ratio_over_interval(f, lo, hi)
    if not math.isfinite(ratio):
        # every realized difference is 0, where the per-edge bound reads 0 >= 0
        ratio = 1.0
    energy = energy_general(theta, graph, f)
    if mu is not None:
        energy += penalty_energy(theta, mu)
    return Certificate(
        expected_cut=expected_cut(theta, graph),
        ratio_used=ratio,
        interval=(lo, hi),
        lower_bound=ratio * (graph.total_weight() - energy) / 2.0,
        energy=energy,
        coupling=f.name,
        mu=mu,
    )
