"""Benchmark objective functions with known minimizers.

Every objective evaluates batches: an (n, d) array of positions maps to an
(n,) array of values.  A single position of shape (d,) is also accepted.
Objectives are immutable and safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np


@dataclass(frozen=True)
class Objective:
    name: str
    dim: int
    fn: Callable[[np.ndarray], np.ndarray] = field(repr=False)
    minimizer: Optional[np.ndarray] = None
    min_value: Optional[float] = None

    def __call__(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=np.float64)
        if not np.all(np.isfinite(x)):
            raise ValueError("non-finite coordinate")
        single = x.ndim == 1
        if single:
            x = x[None, :]
        if x.shape[1] != self.dim:
            raise ValueError(f"expected dimension {self.dim}, got {x.shape[1]}")
        out = self.fn(x)
        return float(out[0]) if single else out


def _ackley_values(x, a=20.0, b=0.2, c=2.0 * np.pi):
    d = x.shape[1]
    norms = np.linalg.norm(x, axis=1)
    return (
        -a * np.exp(-(b / np.sqrt(d)) * norms)
        - np.exp(np.mean(np.cos(c * x), axis=1))
        + a
        + np.e
    )


def ackley(dim: int) -> Objective:
    """Ackley function with a=20, b=0.2, c=2*pi; global minimum 0 at the origin."""
    if dim < 1:
        raise ValueError("dim must be >= 1")
    return Objective("ackley", dim, _ackley_values, np.zeros(dim), 0.0)


def quadratic(dim: int) -> Objective:
    """Squared Euclidean norm; admits closed forms for the Gaussian-tilted mean."""
    if dim < 1:
        raise ValueError("dim must be >= 1")
    return Objective(
        "quadratic", dim, lambda x: np.sum(x * x, axis=1), np.zeros(dim), 0.0
    )


def rastrigin(dim: int) -> Objective:
    if dim < 1:
        raise ValueError("dim must be >= 1")

    def f(x):
        return 10.0 * dim + np.sum(x * x - 10.0 * np.cos(2.0 * np.pi * x), axis=1)

    return Objective("rastrigin", dim, f, np.zeros(dim), 0.0)


def trap_1d(dim: int = 1) -> Objective:
    """1D landscape with global minimum f(0)=0 and a deep local basin at x=5.

    f(x) = min(x^2, 0.5*(x-5)^2 + 0.2).  The offset keeps f(5) = 0.2 > 0, so a
    swarm started around 5 must cross a barrier to reach the global minimum.
    """
    if dim != 1:
        raise ValueError("trap1d is one-dimensional")

    def f(x):
        x0 = x[:, 0]
        return np.minimum(x0 * x0, 0.5 * (x0 - 5.0) ** 2 + 0.2)

    return Objective("trap1d", 1, f, np.zeros(1), 0.0)


OBJECTIVES = {
    "ackley": ackley,
    "quadratic": quadratic,
    "rastrigin": rastrigin,
    "trap1d": trap_1d,
}


def get_objective(name: str, dim: int) -> Objective:
    try:
        factory = OBJECTIVES[name]
    except KeyError:
        known = ", ".join(sorted(OBJECTIVES))
        raise KeyError(f"unknown objective {name!r}; known objectives: {known}")
    return factory(dim)
