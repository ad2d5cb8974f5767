"""Dense real linear algebra and exact integer matrix utilities.

Real matrices are plain ``numpy.ndarray`` (float64).  Integer matrices are
handled with native Python ints internally, so every rank / determinant
decision is exact: no tolerance, no overflow (Python ints are unbounded,
which subsumes a 64->128 bit widening scheme).
"""

from __future__ import annotations

import math

import numpy as np

from .errors import NotPositiveDefinite, NotSymmetric

SYMMETRY_RTOL = 1e-12


def cholesky(g: np.ndarray) -> np.ndarray:
    """Upper-triangular Cholesky factor R of a symmetric positive definite
    matrix, with R^T R = g and positive diagonal.

    Raises NotSymmetric / NotPositiveDefinite accordingly.
    """
    g = np.asarray(g, dtype=float)
    if g.ndim != 2 or g.shape[0] != g.shape[1]:
        raise NotSymmetric(f"expected a square matrix, got shape {g.shape}")
    scale = np.max(np.abs(g)) or 1.0
    if np.max(np.abs(g - g.T)) > SYMMETRY_RTOL * scale:
        raise NotSymmetric("matrix is not symmetric within 1e-12 relative tolerance")

    n = g.shape[0]
    r = np.zeros((n, n))
    for j in range(n):
        pivot = g[j, j] - r[:j, j] @ r[:j, j]
        if pivot <= 0.0:
            raise NotPositiveDefinite(f"pivot {pivot} at index {j}")
        r[j, j] = math.sqrt(pivot)
        if j + 1 < n:
            r[j, j + 1:] = (g[j, j + 1:] - r[:j, j] @ r[:j, j + 1:]) / r[j, j]
    return r


def nearest_integer(x: float) -> int:
    """Round to the nearest integer; a half-way tie goes to the candidate of
    smaller magnitude (0.5 -> 0, -0.5 -> 0, 1.5 -> 1).

    Note this differs from both round-half-even and round-half-up.
    """
    f = math.floor(x)
    frac = x - f
    if frac < 0.5:
        return f
    if frac > 0.5:
        return f + 1
    # tie: f and f+1 straddle zero or share a sign; pick the smaller |.|
    return f if f >= 0 else f + 1


def sgn(x: float) -> int:
    """Sign with sgn(0) = +1."""
    return 1 if x >= 0 else -1


def _to_int_rows(m) -> list[list[int]]:
    a = np.asarray(m)
    if a.ndim != 2:
        raise ValueError("expected a 2-D matrix")
    return [[int(v) for v in row] for row in a]


def int_row_echelon(m) -> tuple[list[list[int]], list[int]]:
    """Fraction-free (Bareiss) row echelon form of an integer matrix.

    Returns (echelon, pivot_cols).  pivot_cols lists, in order, the column
    of each nonzero row's leading coefficient; column j of m is linearly
    independent of columns 0..j-1 exactly when j is in pivot_cols.
    """
    rows = _to_int_rows(m)
    n_rows, n_cols = len(rows), len(rows[0])
    piv_r = 0
    prev = 1
    pivot_cols: list[int] = []
    for col in range(n_cols):
        pr = next((r for r in range(piv_r, n_rows) if rows[r][col] != 0), None)
        if pr is None:
            continue
        if pr != piv_r:
            rows[piv_r], rows[pr] = rows[pr], rows[piv_r]
        pivot_cols.append(col)
        p = rows[piv_r][col]
        for r in range(piv_r + 1, n_rows):
            factor = rows[r][col]
            row_r = rows[r]
            row_p = rows[piv_r]
            for c in range(col + 1, n_cols):
                row_r[c] = (p * row_r[c] - factor * row_p[c]) // prev
            row_r[col] = 0
        prev = p
        piv_r += 1
        if piv_r == n_rows:
            break
    return rows, pivot_cols


def int_rank(m) -> int:
    """Exact rank of an integer matrix."""
    return len(int_row_echelon(m)[1])


def int_det(m) -> int:
    """Exact determinant of a square integer matrix (Bareiss)."""
    rows = _to_int_rows(m)
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant requires a square matrix")
    sign = 1
    prev = 1
    for col in range(n):
        pr = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if pr is None:
            return 0
        if pr != col:
            rows[col], rows[pr] = rows[pr], rows[col]
            sign = -sign
        p = rows[col][col]
        for r in range(col + 1, n):
            factor = rows[r][col]
            for c in range(col + 1, n):
                rows[r][c] = (p * rows[r][c] - factor * rows[col][c]) // prev
            rows[r][col] = 0
        prev = p
    return sign * rows[n - 1][n - 1]


def first_rank_deficient_prefix(m, start: int = 0) -> int | None:
    """Smallest column index j >= start such that columns 0..j of m are
    linearly dependent, or None if every prefix has full column rank.

    Assumes columns 0..start-1 are already independent.
    """
    _, pivot_cols = int_row_echelon(m)
    pivots = set(pivot_cols)
    n_cols = len(np.asarray(m)[0])
    for j in range(start, n_cols):
        if j not in pivots:
            return j
    return None
