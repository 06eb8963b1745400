"""Numerically stable consensus-point computation.

The consensus point of an ensemble is the Gibbs-weighted mean with weights
proportional to exp(-alpha * f(x_j)).  Weights are stabilized by shifting by
the ensemble minimum before exponentiation, so the computation stays finite
for alpha up to 1e16 and arbitrary finite objective values.  In that regime
the consensus degenerates to the position of the best particle.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class SoftminWeights:
    """Normalized Gibbs weights plus the log of the shifted normalizer."""

    weights: np.ndarray
    log_normalizer: float

    def __len__(self):
        return self.weights.shape[0]


def softmin_weights(values, alpha: float) -> SoftminWeights:
    """Gibbs weights exp(-alpha*(f_j - min f)) / sum, stable for any finite input.

    The shift by the ensemble minimum guarantees the largest pre-normalization
    weight is exactly 1; weights whose shifted exponent overflows to -inf
    underflow cleanly to 0.
    """
    v = np.asarray(values, dtype=np.float64)
    if v.ndim != 1:
        raise ValueError("values must be a 1-d array")
    if v.size == 0:
        raise ValueError("empty ensemble")
    if not np.all(np.isfinite(v)):
        raise ValueError("non-finite value")
    if not (alpha >= 0.0):
        raise ValueError("alpha must be >= 0")
    shifted = v - v.min()
    with np.errstate(over="ignore", under="ignore"):
        w = np.exp(-alpha * shifted)
    total = np.sum(w)  # numpy pairwise summation: order-insensitive to ~1e-16
    return SoftminWeights(w / total, float(np.log(total)))


def consensus_point(positions, weights: SoftminWeights) -> np.ndarray:
    """Weighted average of particle positions, sum_j w_j x_j."""
    x = np.asarray(positions, dtype=np.float64)
    if x.ndim != 2:
        raise ValueError("positions must be an (N, d) matrix")
    if x.shape[0] != len(weights):
        raise ValueError("positions row count does not match weight count")
    return weights.weights @ x


def hardmin_point(positions, values) -> np.ndarray:
    """Position of the particle with minimal value; ties go to the lowest index."""
    x = np.asarray(positions, dtype=np.float64)
    v = np.asarray(values, dtype=np.float64)
    if v.size == 0:
        raise ValueError("empty ensemble")
    if x.shape[0] != v.shape[0]:
        raise ValueError("positions row count does not match value count")
    return x[int(np.argmin(v))].copy()
