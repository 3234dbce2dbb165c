"""Seeded generators and connectivity for max-cut instances."""
import logging
from typing import Optional

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from app.models import Graph

logger = logging.getLogger(__name__)

MAX_PAIRING_ATTEMPTS = 10_000


def gen_erdos_renyi(n: int, p: float, seed: Optional[int] = None) -> Graph:
    """G(n, p): each of the n(n-1)/2 pairs included independently with probability p."""
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    rng = np.random.default_rng(seed)
    rows, cols = np.triu_indices(n, k=1)
    keep = rng.random(rows.shape[0]) < p
    return Graph.from_pairs(n, zip(rows[keep], cols[keep]))


def gen_random_cubic(n: int, seed: Optional[int] = None) -> Graph:
    """Uniform 3-regular simple graph via the pairing model with rejection."""
    if n < 4 or n % 2:
        raise ValueError(f"cubic graphs need an even n >= 4, got {n}")
    rng = np.random.default_rng(seed)
    points = np.repeat(np.arange(n), 3)
    for attempt in range(1, MAX_PAIRING_ATTEMPTS + 1):
        pairs = rng.permutation(points).reshape(-1, 2)
        if np.any(pairs[:, 0] == pairs[:, 1]):
            continue
        keys = np.sort(pairs, axis=1)
        if np.unique(keys, axis=0).shape[0] != keys.shape[0]:
            continue
        logger.debug(f"cubic pairing accepted after {attempt} attempts (n={n})")
        return Graph.from_pairs(n, map(tuple, keys))
    raise RuntimeError(f"no simple pairing found for n={n} in {MAX_PAIRING_ATTEMPTS} attempts")


def gen_hypercube(d: int) -> Graph:
    """Q_d: 2^d vertices, adjacent iff their binary labels differ in one bit."""
    if d < 1:
        raise ValueError(f"dimension must be at least 1, got {d}")
    n = 1 << d
    pairs = [(v, v ^ (1 << b)) for v in range(n) for b in range(d) if v < v ^ (1 << b)]
    return Graph.from_pairs(n, pairs)



def component_labels(graph: Graph) -> np.ndarray:
    """Connected-component label of every vertex."""
    u, v, _ = graph.arrays()
    adjacency = coo_matrix((np.ones(u.shape[0]), (u, v)), shape=(graph.n, graph.n))
    _, labels = connected_components(adjacency, directed=False)
    return labels


GENERATORS = {
    "er": gen_erdos_renyi,
    "cubic": gen_random_cubic,
    "hypercube": gen_hypercube,
}


def generate(
    generator: str,
    n: Optional[int] = None,
    p: Optional[float] = None,
    d: Optional[int] = None,
    seed: Optional[int] = None,
) -> Graph:
    """Dispatch on a generator name with the parameters it needs."""
    if generator == "er":
        if n is None or p is None:
            raise ValueError("generator 'er' needs n and p")
        return gen_erdos_renyi(n, p, seed)
    if generator == "cubic":
        if n is None:
            raise ValueError("generator 'cubic' needs n")
        return gen_random_cubic(n, seed)
    if generator == "hypercube":
        if d is None:
            raise ValueError("generator 'hypercube' needs d")
        return gen_hypercube(d)
    raise ValueError(f"unknown generator {generator!r}; choose from {sorted(GENERATORS)}")
