"""Graph model."""
import math

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationInfo, field_validator

Edge = tuple[int, int, float]


class Graph(BaseModel):
    """Undirected weighted graph, 0-indexed, edges stored once with i < j."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(gt=0)
    edges: tuple[Edge, ...] = ()

    @field_validator("edges")
    @classmethod
    def canonical_edges(cls, edges: tuple[Edge, ...], info: ValidationInfo) -> tuple[Edge, ...]:
        n = info.data.get("n")
        if n is None:
            return edges
        seen = set()
        canonical = []
        for i, j, w in edges:
            if i == j:
                raise ValueError(f"self-loop at vertex {i}")
            i, j = min(i, j), max(i, j)
            if i < 0 or j >= n:
                raise ValueError(f"edge ({i}, {j}) out of range for n={n}")
            if not math.isfinite(w):
                raise ValueError(f"non-finite weight on edge ({i}, {j})")
            if (i, j) in seen:
                raise ValueError(f"duplicate edge ({i}, {j})")
            seen.add((i, j))
            canonical.append((i, j, float(w)))
        return tuple(sorted(canonical))

    @classmethod
    def from_pairs(cls, n: int, pairs, weight: float = 1.0) -> "Graph":
        """Build a graph with a constant weight on every pair."""
        return cls(n=n, edges=tuple((int(i), int(j), weight) for i, j in pairs))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def total_weight(self) -> float:
        return float(sum(w for _, _, w in self.edges))

    def arrays(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Edge endpoints and weights as numpy arrays (u, v, w)."""
        if not self.edges:
            return np.zeros(0, dtype=np.intp), np.zeros(0, dtype=np.intp), np.zeros(0)
        u, v, w = zip(*self.edges)
        return np.array(u, dtype=np.intp), np.array(v, dtype=np.intp), np.array(w, dtype=float)

    def degrees(self) -> np.ndarray:
        u, v, _ = self.arrays()
        return np.bincount(u, minlength=self.n) + np.bincount(v, minlength=self.n)
