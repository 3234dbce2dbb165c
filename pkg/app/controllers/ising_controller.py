"""Ising Hamiltonian, the max-cut reduction and an exhaustive oracle."""
import logging

import numpy as np

from app import config
from app.models import Graph, IsingModel, MaxCutSolution, SpinConfig, as_spins

logger = logging.getLogger(__name__)

ORACLE_CHUNK = 1 << 16


class OracleSizeError(ValueError):
    """Graph too large for exhaustive search."""


def hamiltonian(model: IsingModel, spins: SpinConfig) -> float:
    """H(σ) = -Σ_{i<j} J_ij σ_i σ_j (no external field)."""
    s = as_spins(spins, model.n).astype(float)
    i, j, values = model.arrays()
    return float(-np.sum(values * s[i] * s[j]))


def maxcut_to_ising(graph: Graph) -> IsingModel:
    """J_ij = -w_ij on every edge, so minimizing H maximizes the cut."""
    return IsingModel(n=graph.n, couplings=tuple((i, j, -w) for i, j, w in graph.edges))


def cut_value(graph: Graph, spins: SpinConfig) -> float:
    """Total weight of edges whose endpoints carry different spins."""
    s = as_spins(spins, graph.n)
    u, v, w = graph.arrays()
    return float(np.sum(w[s[u] != s[v]]))


def total_coupling_energy(graph: Graph, spins: SpinConfig) -> float:
    """Σ_{i<j} a_ij σ_i σ_j, which equals total_weight - 2 * cut_value."""
    s = as_spins(spins, graph.n).astype(float)
    u, v, w = graph.arrays()
    return float(np.sum(w * s[u] * s[v]))


def spins_from_phases(theta: np.ndarray) -> SpinConfig:
    """Binarize by hemisphere: +1 where cos θ >= 0."""
    theta = np.asarray(theta, dtype=float)
    return np.where(np.cos(theta) >= 0.0, 1, -1).astype(np.int8)


def configuration_from_spins(spins: SpinConfig) -> np.ndarray:
    """θ_i = 0 for σ_i = +1 and π for σ_i = -1."""
    s = as_spins(spins)
    return np.where(s > 0, 0.0, np.pi)


def brute_force_maxcut(graph: Graph, max_n: int = config.ORACLE_MAX_N, tol: float = 1e-9) -> MaxCutSolution:
    """Exact max-cut over 2^(n-1) configurations with σ_0 fixed to +1.

    Uniqueness refers to the unordered partition {V1, V2}; fixing σ_0
    already identifies each partition with a single configuration.
    """
    n = graph.n
    if n > max_n:
        raise OracleSizeError(f"exhaustive search refused for n={n} > {max_n}")
    u, v, w = graph.arrays()
    free = n - 1
    total = 1 << free
    shifts = np.arange(free, dtype=np.int64)

    best_value = -np.inf
    best_index = 0
    count = 0
    for start in range(0, total, ORACLE_CHUNK):
        index = np.arange(start, min(start + ORACLE_CHUNK, total), dtype=np.int64)
        sides = np.zeros((index.shape[0], n), dtype=np.int8)
        sides[:, 1:] = (index[:, None] >> shifts) & 1
        values = ((sides[:, u] != sides[:, v]) * w).sum(axis=1)
        chunk_best = values.max()
        if chunk_best > best_value + tol:
            best_value = chunk_best
            best_index = int(index[np.argmax(values)])
            count = int(np.sum(values >= chunk_best - tol))
        elif chunk_best >= best_value - tol:
            count += int(np.sum(values >= best_value - tol))

    bits = (best_index >> np.arange(free)) & 1 if free else np.zeros(0, dtype=np.int64)
    spins = np.concatenate([[1], np.where(bits == 1, -1, 1)]).astype(int)
    logger.debug(f"oracle n={n}: W_mc={best_value}, optimal partitions={count}")
    return MaxCutSolution(
        value=float(best_value) if graph.edges else 0.0,
        spins=spins.tolist(),
        unique=count == 1,
        optimal_count=count,
    )
