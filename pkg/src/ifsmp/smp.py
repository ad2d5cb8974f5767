"""Exact successive-minima solvers.

`solve_smp` is the single-pass pipeline: Cholesky -> LLL -> one
Schnorr-Euchner enumeration that starts from a permuted identity basis and
repairs it with `update_basis` at every improving leaf.  `brute_force_smp`
(exhaustive box search + greedy independent selection) is the ground-truth
oracle, and `baseline_smp` rebuilds the column-by-column approach of prior
solvers for timing comparison.

All independence decisions are made on integer matrices with exact
arithmetic; no floating-point rank tests anywhere.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .enumeration import _as_rows, _search, enumerate_below
from .errors import DimensionTooLarge, PreconditionViolated, SingularCoefficientMatrix
from .lll import DEFAULT_DELTA, lll_reduce
from .matrixcore import cholesky, int_det, int_rank


@dataclass(frozen=True)
class Candidate:
    """A coefficient vector together with its lattice norm ||r_bar c||."""

    coeffs: tuple[int, ...]
    norm: float


@dataclass(frozen=True)
class WorkingBasis:
    """Columns of the current coefficient matrix C with sorted norms."""

    cols: tuple[tuple[int, ...], ...]
    norms: tuple[float, ...]

    @property
    def dim(self) -> int:
        return len(self.cols)

    def matrix(self) -> np.ndarray:
        """Columns assembled into an integer matrix."""
        return np.array(self.cols, dtype=np.int64).T


@dataclass(frozen=True)
class SmpSolution:
    a_star: np.ndarray
    lambdas: tuple[float, ...]
    objective: float
    rate_total: float


def _first_dependent_column(cols: list, n_rows: int) -> int | None:
    """Index of the first column that does not extend the rank of the
    columns before it, or None.  Fraction-free elimination, stopping as
    soon as a pivot-less column appears."""
    rows = [[int(col[r]) for col in cols] for r in range(n_rows)]
    n_cols = len(cols)
    piv_r = 0
    prev = 1
    for col in range(n_cols):
        pr = next((r for r in range(piv_r, n_rows) if rows[r][col] != 0), None)
        if pr is None:
            return col
        if pr != piv_r:
            rows[piv_r], rows[pr] = rows[pr], rows[piv_r]
        p = rows[piv_r][col]
        row_p = rows[piv_r]
        for r in range(piv_r + 1, n_rows):
            factor = rows[r][col]
            row_r = rows[r]
            for c in range(col + 1, n_cols):
                row_r[c] = (p * row_r[c] - factor * row_p[c]) // prev
            row_r[col] = 0
        prev = p
        piv_r += 1
    return None


def update_basis(basis: WorkingBasis, cand: Candidate) -> WorkingBasis:
    """Insert a strictly shorter candidate column into a sorted basis.

    The candidate is placed after all columns of norm <= its own; then the
    column removed is the one with the largest index whose removal keeps
    the matrix invertible, found as the first rank-deficient column prefix
    past the insertion point.  If the candidate itself is dependent on the
    shorter columns it is dropped and the basis returned unchanged.
    """
    if not any(cand.coeffs):
        raise PreconditionViolated("candidate coefficient vector is zero")
    if not cand.norm < basis.norms[-1]:
        raise PreconditionViolated(
            f"candidate norm {cand.norm} is not below the largest basis norm"
        )
    n = basis.dim
    # stable insertion: equal-norm incumbents stay ahead of the newcomer
    i = 0
    while i < n and basis.norms[i] <= cand.norm:
        i += 1
    tilde_cols = basis.cols[:i] + (cand.coeffs,) + basis.cols[i:]
    tilde_norms = basis.norms[:i] + (cand.norm,) + basis.norms[i:]

    drop = _first_dependent_column(list(tilde_cols), n)
    if drop == i:
        # candidate is a combination of the shorter columns: keep the basis
        return basis
    if drop is None:
        drop = n
    cols = tilde_cols[:drop] + tilde_cols[drop + 1:]
    norms = tilde_norms[:drop] + tilde_norms[drop + 1:]
    return WorkingBasis(cols=cols, norms=norms)


def _initial_basis(rows: list[list[float]]) -> WorkingBasis:
    """Permuted identity columns sorted by ||r_bar e_k|| (stable)."""
    n = len(rows)
    col_norms = [math.hypot(*(rows[i][k] for i in range(k + 1))) for k in range(n)]
    order = sorted(range(n), key=lambda k: col_norms[k])
    cols = tuple(tuple(1 if r == k else 0 for r in range(n)) for k in order)
    norms = tuple(col_norms[k] for k in order)
    return WorkingBasis(cols=cols, norms=norms)


def solve_rsmp(r_bar) -> tuple[np.ndarray, list[float]]:
    """Successive minima of L(r_bar) in a single enumeration pass.

    Starts from the sorted permuted identity, visits sign-canonical vectors
    inside the shrinking radius (the largest current basis norm), and
    repairs the basis with `update_basis` at every nonzero leaf.  Returns
    the invertible coefficient matrix (columns are the minima vectors) and
    the nondecreasing norms.
    """
    rows = _as_rows(r_bar)
    n = len(rows)
    start = _initial_basis(rows)
    cols: list[tuple[int, ...]] = list(start.cols)
    norms: list[float] = list(start.norms)

    def on_leaf(c: list[int], norm_sq: float) -> float | None:
        norm = math.sqrt(norm_sq)
        if not norm < norms[-1]:  # sqrt rounding at the radius
            return None
        i = 0
        while i < n and norms[i] <= norm:
            i += 1
        tilde = cols[:i] + [tuple(c)] + cols[i:]
        drop = _first_dependent_column(tilde, n)
        if drop == i:
            return None
        if drop is None:
            drop = n
        del tilde[drop]
        cols[:] = tilde
        norms.insert(i, norm)
        del norms[drop]
        return norms[-1] ** 2

    _search(rows, norms[-1] ** 2, on_leaf)
    return WorkingBasis(cols=tuple(cols), norms=tuple(norms)).matrix(), norms


def solve_smp(g, delta: float = DEFAULT_DELTA) -> SmpSolution:
    """Optimal integer coefficient matrix for a positive definite Gram matrix.

    Pipeline: Cholesky factor R, LLL-reduce to r_bar with unimodular z,
    solve the reduced problem, undo the reduction with a_star = z @ c_star.
    The columns of a_star attain the successive minima of L(R); the
    objective is the squared largest minimum and rate_total the resulting
    total achievable rate in bits per channel use.
    """
    r = cholesky(g)
    reduced = lll_reduce(r, delta)
    c_star, lambdas = solve_rsmp(reduced.r_bar)
    a_star = _int_matmul(reduced.z, c_star)
    objective = lambdas[-1] ** 2
    n = a_star.shape[0]
    rate_total = n * max(0.0, -0.5 * math.log2(objective))
    return SmpSolution(
        a_star=a_star,
        lambdas=tuple(lambdas),
        objective=objective,
        rate_total=rate_total,
    )


def _int_matmul(a, b) -> np.ndarray:
    """Exact integer matrix product; conversion raises on 64-bit overflow."""
    a_rows = [[int(v) for v in row] for row in np.asarray(a)]
    b_cols = [[int(v) for v in col] for col in np.asarray(b).T]
    prod = [[sum(x * y for x, y in zip(row, col)) for col in b_cols] for row in a_rows]
    return np.array(prod, dtype=np.int64)


def _column_norms(r: np.ndarray) -> np.ndarray:
    return np.linalg.norm(np.asarray(r, dtype=float), axis=0)


def brute_force_smp(r_bar, max_dim: int = 8) -> tuple[np.ndarray, list[float]]:
    """Ground-truth successive minima by exhaustive box enumeration.

    Enumerates every sign-canonical nonzero c in a box guaranteed to cover
    the ball of radius beta_0 = max_k ||r_bar e_k|| (non-strict, so the
    identity columns themselves are candidates), sorts by norm, and
    greedily keeps each vector that is exactly independent of those already
    kept.  Exponential cost; guarded by max_dim.
    """
    r = np.asarray(r_bar, dtype=float)
    n = r.shape[0]
    if n > max_dim:
        raise DimensionTooLarge(f"brute force guarded at dimension {max_dim}")
    _as_rows(r)  # nonsingularity check
    beta0 = float(np.max(_column_norms(r)))

    # per-coordinate bounds: |c_i| <= (beta0 + sum_{j>i} |r_ij| b_j) / |r_ii|
    bounds = [0] * n
    for i in range(n - 1, -1, -1):
        slack = beta0 + sum(abs(r[i, j]) * bounds[j] for j in range(i + 1, n))
        bounds[i] = int(math.floor(slack / abs(r[i, i]))) + 1

    # canonical sign: walk coordinates top-down, first nonzero must be > 0
    ranges = [range(-b, b + 1) for b in bounds]
    ranges[n - 1] = range(0, bounds[n - 1] + 1)
    candidates: list[tuple[float, tuple[int, ...]]] = []
    chunk: list[tuple[int, ...]] = []

    def flush() -> None:
        if not chunk:
            return
        arr = np.array(chunk, dtype=np.int64)
        norms = np.linalg.norm(arr @ r.T, axis=1)
        keep = norms <= beta0
        for vec, nv in zip(arr[keep], norms[keep]):
            candidates.append((float(nv), tuple(int(v) for v in vec)))
        chunk.clear()

    for rev in itertools.product(*reversed(ranges)):
        c = rev[::-1]
        last_nonzero = next((v for v in reversed(c) if v != 0), 0)
        if last_nonzero <= 0:
            continue
        chunk.append(c)
        if len(chunk) >= 65536:
            flush()
    flush()

    candidates.sort(key=lambda item: item[0])
    chosen: list[tuple[int, ...]] = []
    lambdas: list[float] = []
    for norm, vec in candidates:
        trial = chosen + [vec]
        rows_t = [[col[r] for col in trial] for r in range(n)]
        if int_rank(rows_t) == len(trial):
            chosen.append(vec)
            lambdas.append(norm)
            if len(chosen) == n:
                break
    if len(chosen) < n:
        raise RuntimeError("box enumeration failed to find a full basis")
    return np.array(chosen, dtype=np.int64).T, lambdas


def baseline_smp(r_bar) -> tuple[np.ndarray, list[float]]:
    """Column-by-column successive minima (prior-art style baseline).

    Column k is the shortest sign-canonical vector exactly independent of
    the previously fixed columns, found by a bounded enumeration whose
    radius starts just above the k-th smallest identity-column norm and
    shrinks on every improving independent candidate.
    """
    r = np.asarray(r_bar, dtype=float)
    rows = _as_rows(r)
    n = r.shape[0]
    ident_norms = sorted(_column_norms(r))
    chosen: list[tuple[int, ...]] = []
    lambdas: list[float] = []
    for k in range(n):
        radius = ident_norms[k] * (1 + 1e-12) + 1e-12
        found = _min_independent(rows, radius, chosen)
        while found is None:  # unreachable in theory; guard against fp edge
            radius *= 1.5
            found = _min_independent(rows, radius, chosen)
        norm, vec = found
        chosen.append(vec)
        lambdas.append(norm)
    return np.array(chosen, dtype=np.int64).T, lambdas


def _min_independent(
    rows: list[list[float]],
    radius: float,
    fixed: list[tuple[int, ...]],
) -> tuple[float, tuple[int, ...]] | None:
    """Shortest vector below `radius` independent of the fixed columns."""
    best: dict = {"norm_sq": None, "c": None}
    n = len(rows)

    def on_leaf(c: list[int], norm_sq: float):
        trial = fixed + [tuple(c)]
        rows_t = [[col[r] for col in trial] for r in range(n)]
        if int_rank(rows_t) < len(trial):
            return None
        best["norm_sq"] = norm_sq
        best["c"] = tuple(c)
        return norm_sq

    _search(rows, radius * radius, on_leaf)
    if best["c"] is None:
        return None
    return math.sqrt(best["norm_sq"]), best["c"]


def check_invertible(a) -> None:
    """Raise SingularCoefficientMatrix unless det(a) != 0 (exact)."""
    if int_det(a) == 0:
        raise SingularCoefficientMatrix("integer matrix has zero determinant")


__all__ = [
    "Candidate",
    "WorkingBasis",
    "SmpSolution",
    "update_basis",
    "solve_rsmp",
    "solve_smp",
    "brute_force_smp",
    "baseline_smp",
    "check_invertible",
]
