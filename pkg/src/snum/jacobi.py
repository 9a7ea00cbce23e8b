"""One-sided Jacobi singular value decomposition.

Kept in-repo so the Hilbert-space exact paths depend on nothing outside the
package.  Works column-wise: plane rotations orthogonalize column pairs until
the off-diagonal mass of the implicit Gram matrix falls below tolerance.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import ConvergenceFailure

OFF_DIAG_TOL = 1e-12
MAX_SWEEPS = 50


def jacobi_svd(a, off_tol: float = OFF_DIAG_TOL, max_sweeps: int = MAX_SWEEPS):
    """Return (s, u, vt) with a = u @ diag(s) @ vt, s non-increasing.

    u has orthonormal columns (shape m x k), vt is k x n with orthonormal
    rows, k = min(m, n).  Raises ConvergenceFailure if the off-diagonal
    mass has not dropped below off_tol after max_sweeps sweeps.
    """
    a = np.array(a, dtype=float)
    if a.ndim != 2:
        raise ValueError("jacobi_svd expects a 2-d array")
    m, n = a.shape
    if m < n:
        s, u, vt = jacobi_svd(a.T, off_tol, max_sweeps)
        return s, vt.T, u.T

    work = a.copy()
    v = np.eye(n)
    for _ in range(max_sweeps):
        rotated = False
        for i in range(n - 1):
            for j in range(i + 1, n):
                ci = work[:, i]
                cj = work[:, j]
                alpha = float(ci @ ci)
                beta = float(cj @ cj)
                gamma = float(ci @ cj)
                denom = math.sqrt(alpha * beta)
                if denom == 0.0 or abs(gamma) <= off_tol * denom:
                    continue
                rotated = True
                zeta = (beta - alpha) / (2.0 * gamma)
                sign = 1.0 if zeta >= 0.0 else -1.0
                t = sign / (abs(zeta) + math.sqrt(1.0 + zeta * zeta))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s_ = c * t
                gi = c * work[:, i] - s_ * work[:, j]
                gj = s_ * work[:, i] + c * work[:, j]
                work[:, i], work[:, j] = gi, gj
                vi = c * v[:, i] - s_ * v[:, j]
                vj = s_ * v[:, i] + c * v[:, j]
                v[:, i], v[:, j] = vi, vj
        if not rotated:
            break
    else:
        raise ConvergenceFailure(
            f"one-sided Jacobi did not converge in {max_sweeps} sweeps"
        )

    sigma = np.sqrt((work * work).sum(axis=0))
    order = np.argsort(-sigma, kind="stable")
    sigma = sigma[order]
    work = work[:, order]
    v = v[:, order]

    u = np.zeros((m, n))
    scale = sigma[0] if sigma.size and sigma[0] > 0 else 1.0
    for j in range(n):
        if sigma[j] > 1e-14 * scale:
            u[:, j] = work[:, j] / sigma[j]
        else:
            sigma[j] = 0.0
            u[:, j] = _complete_column(u, j, m)
    return sigma, u, v.T


def _complete_column(u, j, m):
    # orthonormal fill-in for a zero singular direction
    for k in range(m):
        cand = np.zeros(m)
        cand[k] = 1.0
        cand -= u[:, :j] @ (u[:, :j].T @ cand)
        norm = np.linalg.norm(cand)
        if norm > 1e-8:
            return cand / norm
    raise ConvergenceFailure("could not complete orthonormal basis")


def svd_rank(a, rel_tol: float = 1e-10) -> int:
    s, _, _ = jacobi_svd(a)
    if s.size == 0 or s[0] <= 0.0:
        return 0
    return int(np.count_nonzero(s > rel_tol * s[0]))


def truncated(a, rank: int):
    """Best rank-<=rank approximation in the spectral norm (Eckart-Young)."""
    s, u, vt = jacobi_svd(a)
    if rank <= 0:
        return np.zeros_like(np.asarray(a, dtype=float))
    k = min(rank, s.size)
    return (u[:, :k] * s[:k]) @ vt[:k, :]
