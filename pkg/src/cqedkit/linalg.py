"""Symmetric eigensolvers used by the physics modules.

Two deliberately independent routes are provided:

* ``eigh_tridiagonal`` solves the symmetric tridiagonal problems produced by
  the charge-basis Hamiltonian. It is backed by LAPACK (via scipy), which is
  the appropriate tool for the tens of thousands of small solves the inverse
  fit performs.
* ``eigh_dense`` is a self-contained cyclic Jacobi solver used both as an
  independent cross-check of the tridiagonal route (the two share no code)
  and to diagonalize the dense joint qubit-resonator Hamiltonian.

Every solve is post-checked against the residual bound
``|H v - lambda v| <= 1e-10 * max(1, |lambda|)`` per eigenpair.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
import scipy.linalg

from .errors import ConvergenceError, DomainError, MatrixValidationError

RESIDUAL_BOUND = 1e-10
# Relative off-diagonal Frobenius norm at which Jacobi sweeps stop.
_JACOBI_TOL = 1e-13
_JACOBI_MAX_SWEEPS = 40


@dataclass(frozen=True)
class SymTridiagonal:
    """Symmetric tridiagonal matrix given by its diagonal and off-diagonal."""

    diag: np.ndarray
    offdiag: np.ndarray

    def __post_init__(self):
        diag = np.asarray(self.diag, dtype=float)
        offdiag = np.asarray(self.offdiag, dtype=float)
        if diag.ndim != 1 or diag.size < 1:
            raise MatrixValidationError("diagonal must be a vector of length >= 1")
        if offdiag.shape != (diag.size - 1,):
            raise MatrixValidationError(
                f"off-diagonal must have length {diag.size - 1}, got {offdiag.size}"
            )
        if not (np.all(np.isfinite(diag)) and np.all(np.isfinite(offdiag))):
            raise MatrixValidationError("matrix entries must all be finite")
        object.__setattr__(self, "diag", diag)
        object.__setattr__(self, "offdiag", offdiag)

    @property
    def n(self) -> int:
        return self.diag.size

    def to_dense(self) -> np.ndarray:
        m = np.diag(self.diag)
        if self.n > 1:
            m += np.diag(self.offdiag, 1) + np.diag(self.offdiag, -1)
        return m


@dataclass(frozen=True)
class EigenResult:
    """``values``: k eigenvalues, ascending. ``vectors``: matching orthonormal
    columns (shape N x k)."""

    values: np.ndarray
    vectors: np.ndarray


def _check_k(k: int, n: int):
    if not 1 <= k <= n:
        raise DomainError(f"eigenpair count k={k} must satisfy 1 <= k <= {n}")


def _canonical_signs(vectors: np.ndarray) -> np.ndarray:
    # Fix the sign gauge: largest-magnitude component of each vector positive.
    idx = np.argmax(np.abs(vectors), axis=0)
    signs = np.sign(vectors[idx, np.arange(vectors.shape[1])])
    signs[signs == 0.0] = 1.0
    return vectors * signs


def _check_residuals(apply_m, values: np.ndarray, vectors: np.ndarray, what: str):
    resid = np.linalg.norm(apply_m(vectors) - vectors * values, axis=0)
    bounds = RESIDUAL_BOUND * np.maximum(1.0, np.abs(values))
    if np.any(resid > bounds):
        raise ConvergenceError(
            f"{what}: eigenpair residual exceeds bound",
            worst_residual=float(resid.max()),
        )


def eigh_tridiagonal(m: SymTridiagonal, k: int) -> EigenResult:
    """Lowest ``k`` eigenpairs of a symmetric tridiagonal matrix.

    Returns eigenvalues in ascending order with orthonormal eigenvectors.
    Raises ConvergenceError (carrying the worst residual) if the backend
    fails or the residual bound is not met.
    """
    _check_k(k, m.n)
    if m.n == 1:
        return EigenResult(values=m.diag.copy(), vectors=np.ones((1, 1)))
    try:
        values, vectors = scipy.linalg.eigh_tridiagonal(
            m.diag, m.offdiag, select="i", select_range=(0, k - 1)
        )
    except np.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK failure
        raise ConvergenceError(f"tridiagonal eigensolver failed: {exc}") from exc
    vectors = _canonical_signs(vectors)

    def apply_m(v):
        out = m.diag[:, None] * v
        out[:-1] += m.offdiag[:, None] * v[1:]
        out[1:] += m.offdiag[:, None] * v[:-1]
        return out

    _check_residuals(apply_m, values, vectors, "eigh_tridiagonal")
    return EigenResult(values=values, vectors=vectors)


def tridiagonal_eigenvalues(m: SymTridiagonal, k: int) -> np.ndarray:
    """Lowest ``k`` eigenvalues only; the fast path for parameter scans."""
    _check_k(k, m.n)
    if m.n == 1:
        return m.diag.copy()
    return scipy.linalg.eigvalsh_tridiagonal(
        m.diag, m.offdiag, select="i", select_range=(0, k - 1)
    )


@lru_cache(maxsize=32)
def _round_robin_rounds(n: int) -> tuple[tuple[np.ndarray, np.ndarray], ...]:
    """Round-robin tournament schedule: n-1 rounds of disjoint index pairs
    covering every (p, q) pair exactly once per sweep."""
    m = n if n % 2 == 0 else n + 1
    players = list(range(m))
    rounds = []
    for _ in range(m - 1):
        ps, qs = [], []
        for i in range(m // 2):
            a, b = players[i], players[m - 1 - i]
            if a < n and b < n:
                ps.append(min(a, b))
                qs.append(max(a, b))
        rounds.append((np.array(ps, dtype=np.intp), np.array(qs, dtype=np.intp)))
        players = [players[0], players[-1], *players[1:-1]]
    return tuple(rounds)


def eigh_dense(m: np.ndarray, k: int) -> EigenResult:
    """Lowest ``k`` eigenpairs of a real symmetric matrix by cyclic Jacobi.

    The sweep visits every off-diagonal pair once per cycle, ordered as
    round-robin rounds of mutually disjoint pairs so each round's rotations
    commute and can be applied as one batched update. Sweeps continue until
    the off-diagonal Frobenius norm falls below ``1e-12 * |m|``.

    Raises MatrixValidationError if ``m`` is not symmetric to 1e-12 relative,
    ConvergenceError if the sweep cap is hit first.
    """
    a = np.asarray(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise MatrixValidationError(f"expected a square matrix, got shape {a.shape}")
    n = a.shape[0]
    _check_k(k, n)
    if not np.all(np.isfinite(a)):
        raise MatrixValidationError("matrix entries must all be finite")
    scale = max(float(np.abs(a).max()), 1e-300)
    if float(np.abs(a - a.T).max()) > 1e-12 * scale:
        raise MatrixValidationError("matrix is not symmetric within 1e-12 relative")

    a = (a + a.T) / 2.0
    source = a.copy()
    v = np.eye(n)
    norm = max(float(np.linalg.norm(a)), 1e-300)
    converged = False
    for _ in range(_JACOBI_MAX_SWEEPS):
        off = float(np.sqrt(2.0 * np.sum(np.triu(a, 1) ** 2)))
        if off <= _JACOBI_TOL * norm:
            converged = True
            break
        for p, q in _round_robin_rounds(n):
            apq = a[p, q]
            live = apq != 0.0
            if not np.any(live):
                continue
            lp, lq, lapq = p[live], q[live], apq[live]
            tau = (a[lq, lq] - a[lp, lp]) / (2.0 * lapq)
            t = np.sign(tau) / (np.abs(tau) + np.sqrt(1.0 + tau * tau))
            t[tau == 0.0] = 1.0
            c = 1.0 / np.sqrt(1.0 + t * t)
            s = t * c
            rp, rq = a[lp, :], a[lq, :]
            a[lp, :] = c[:, None] * rp - s[:, None] * rq
            a[lq, :] = s[:, None] * rp + c[:, None] * rq
            cp, cq = a[:, lp], a[:, lq]
            a[:, lp] = cp * c - cq * s
            a[:, lq] = cp * s + cq * c
            a[lp, lq] = 0.0
            a[lq, lp] = 0.0
            vp, vq = v[:, lp], v[:, lq]
            v[:, lp] = vp * c - vq * s
            v[:, lq] = vp * s + vq * c
    if not converged:
        off = float(np.sqrt(2.0 * np.sum(np.triu(a, 1) ** 2)))
        raise ConvergenceError(
            f"Jacobi sweeps did not converge after {_JACOBI_MAX_SWEEPS} cycles",
            worst_residual=off,
        )
    order = np.argsort(np.diag(a), kind="stable")[:k]
    values = np.diag(a)[order].copy()
    vectors = _canonical_signs(v[:, order])
    _check_residuals(lambda w: source @ w, values, vectors, "eigh_dense")
    return EigenResult(values=values, vectors=vectors)
