"""Integer-forcing receiver formulas: Gram matrix, MMSE filter, rates.

Rates are in bits per channel use (base-2 logs).  The SMP solver returns a
matrix whose COLUMNS are the successive-minima vectors; the rate functions
here consume coefficient ROWS, so callers pass the solver output transposed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import cho_factor, cho_solve

from .errors import InvalidPower, SingularCoefficientMatrix, ZeroVector
from .matrixcore import int_det


def gram_matrix(h, p: float) -> np.ndarray:
    """G = I - H^T (H H^T + I/P)^{-1} H, symmetrized.

    Positive definite with eigenvalues in (0, 1] for any H and P > 0.  The
    inner inverse is applied through a Cholesky solve, never formed.
    """
    if p <= 0:
        raise InvalidPower(f"power must be positive, got {p}")
    h = np.asarray(h, dtype=float)
    n_r = h.shape[0]
    m = h @ h.T + np.eye(n_r) / p
    g = np.eye(h.shape[1]) - h.T @ cho_solve(cho_factor(m), h)
    return (g + g.T) / 2


def filter_matrix(a, h, p: float) -> np.ndarray:
    """MMSE filter B with rows b_m^T = a_m^T H^T (H H^T + I/P)^{-1}."""
    if p <= 0:
        raise InvalidPower(f"power must be positive, got {p}")
    a = np.asarray(a, dtype=float)
    h = np.asarray(h, dtype=float)
    m = h @ h.T + np.eye(h.shape[0]) / p
    return cho_solve(cho_factor(m), h @ a.T).T


def rate_m(a_m, g) -> float:
    """Per-stream achievable rate max(0, log2(1 / a^T G a) / 2)."""
    a_m = np.asarray(a_m)
    if not np.any(a_m):
        raise ZeroVector("coefficient vector must be nonzero")
    quad = float(a_m.astype(float) @ np.asarray(g, dtype=float) @ a_m.astype(float))
    return max(0.0, -0.5 * math.log2(quad))


def total_rate(a, g) -> float:
    """Total rate N_t * min_m rate_m over the rows of an invertible a."""
    a = np.asarray(a)
    if int_det(a) == 0:
        raise SingularCoefficientMatrix("coefficient matrix must be invertible")
    n = a.shape[0]
    return n * min(rate_m(a[m], g) for m in range(n))


@dataclass(frozen=True)
class ChannelInstance:
    """A channel realization with its power constraint and cached Gram matrix."""

    h: np.ndarray
    p: float
    g: np.ndarray = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "g", gram_matrix(self.h, self.p))
