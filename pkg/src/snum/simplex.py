"""Dense two-phase primal simplex with Bland's rule.

Minimal on purpose: problem sizes in this package stay around a hundred
variables, where a dense tableau with an anti-cycling pivot rule is exact
enough and simple enough to audit.  No presolve, no sparsity.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import SolverError

PIVOT_TOL = 1e-10
FEAS_TOL = 1e-8


@dataclass
class LPResult:
    status: str                 # "optimal" | "unbounded" | "infeasible"
    x: np.ndarray | None
    value: float | None
    basis: list[int] = field(default_factory=list)
    iterations: int = 0
    dual_feasible: bool = False


def _pivot(tab, basis, row, col):
    tab[row] /= tab[row, col]
    for r in range(tab.shape[0]):
        if r != row and tab[r, col] != 0.0:
            tab[r] -= tab[r, col] * tab[row]
    basis[row] = col


def _bland_iterate(tab, basis, ncols, max_iter):
    """Run Bland-rule pivots on the tableau (last row = objective, last col =
    rhs).  Returns (status, iterations)."""
    it = 0
    while True:
        if it > max_iter:
            return "stalled", it
        obj = tab[-1, :ncols]
        enter = -1
        for j in range(ncols):
            if obj[j] < -PIVOT_TOL:
                enter = j
                break
        if enter < 0:
            return "optimal", it
        col = tab[:-1, enter]
        rhs = tab[:-1, -1]
        best_ratio, leave = None, -1
        for r in range(col.shape[0]):
            if col[r] > PIVOT_TOL:
                ratio = rhs[r] / col[r]
                if (leave < 0 or ratio < best_ratio - PIVOT_TOL
                        or (abs(ratio - best_ratio) <= PIVOT_TOL
                            and basis[r] < basis[leave])):
                    best_ratio, leave = ratio, r
        if leave < 0:
            return "unbounded", it
        _pivot(tab, basis, leave, enter)
        it += 1


def solve_standard(c, a, b, max_iter: int = 20000) -> LPResult:
    """min c.x  s.t.  a x = b, x >= 0  (two-phase, Bland's rule)."""
    a = np.atleast_2d(np.asarray(a, dtype=float)).copy()
    b = np.asarray(b, dtype=float).copy()
    c = np.asarray(c, dtype=float)
    m, n = a.shape

    neg = b < 0
    a[neg] *= -1.0
    b[neg] *= -1.0

    # phase 1: artificial basis
    tab = np.zeros((m + 1, n + m + 1))
    tab[:m, :n] = a
    tab[:m, n:n + m] = np.eye(m)
    tab[:m, -1] = b
    tab[-1, n:n + m] = 1.0
    basis = list(range(n, n + m))
    for r in range(m):           # price out artificials
        tab[-1] -= tab[r]
    status, it1 = _bland_iterate(tab, basis, n + m, max_iter)
    if status == "stalled":
        raise SolverError("simplex exceeded its pivot budget in phase 1")
    if status != "optimal" or tab[-1, -1] < -FEAS_TOL:
        return LPResult("infeasible", None, None, basis, it1, False)

    # drive any residual artificial out of the basis
    rows_to_drop = []
    for r in range(m):
        if basis[r] >= n:
            piv = -1
            for j in range(n):
                if abs(tab[r, j]) > PIVOT_TOL:
                    piv = j
                    break
            if piv >= 0:
                _pivot(tab, basis, r, piv)
            else:
                rows_to_drop.append(r)
    if rows_to_drop:
        keep = [r for r in range(m) if r not in rows_to_drop]
        tab = np.vstack([tab[keep], tab[-1:]])
        basis = [basis[r] for r in keep]
        m = len(keep)

    # phase 2
    tab2 = np.zeros((m + 1, n + 1))
    tab2[:m, :n] = tab[:m, :n]
    tab2[:m, -1] = tab[:m, -1]
    tab2[-1, :n] = c
    for r in range(m):
        tab2[-1] -= c[basis[r]] * tab2[r]
    status, it2 = _bland_iterate(tab2, basis, n, max_iter)
    if status == "stalled":
        raise SolverError("simplex exceeded its pivot budget in phase 2")
    if status == "unbounded":
        return LPResult("unbounded", None, None, basis, it1 + it2, False)

    x = np.zeros(n)
    for r in range(m):
        x[basis[r]] = tab2[r, -1]
    value = float(c @ x)
    dual_ok = bool((tab2[-1, :n] >= -1e-7).all())
    return LPResult("optimal", x, value, list(basis), it1 + it2, dual_ok)


def lp_min(c, a_ub=None, b_ub=None, a_eq=None, b_eq=None,
           max_iter: int = 20000) -> LPResult:
    """min c.z  s.t.  a_ub z <= b_ub, a_eq z = b_eq,  z free.

    Free variables are split into positive parts; inequality rows get slacks.
    The returned x is the recombined free vector.
    """
    c = np.asarray(c, dtype=float)
    n = c.shape[0]
    rows = []
    rhs = []
    n_ub = 0
    if a_ub is not None and len(np.atleast_2d(a_ub)):
        a_ub = np.atleast_2d(np.asarray(a_ub, dtype=float))
        b_ub = np.asarray(b_ub, dtype=float)
        n_ub = a_ub.shape[0]
        rows.append(a_ub)
        rhs.append(b_ub)
    if a_eq is not None and len(np.atleast_2d(a_eq)):
        a_eq = np.atleast_2d(np.asarray(a_eq, dtype=float))
        b_eq = np.asarray(b_eq, dtype=float)
        rows.append(a_eq)
        rhs.append(b_eq)
    if not rows:
        raise ValueError("lp_min needs at least one constraint block")
    big_a = np.vstack(rows)
    big_b = np.concatenate(rhs)
    m = big_a.shape[0]

    # columns: z+ (n), z- (n), slacks (n_ub)
    a_std = np.zeros((m, 2 * n + n_ub))
    a_std[:, :n] = big_a
    a_std[:, n:2 * n] = -big_a
    if n_ub:
        a_std[:n_ub, 2 * n:] = np.eye(n_ub)
    c_std = np.concatenate([c, -c, np.zeros(n_ub)])

    res = solve_standard(c_std, a_std, big_b, max_iter)
    if res.status != "optimal":
        return res
    z = res.x[:n] - res.x[n:2 * n]
    return LPResult("optimal", z, float(c @ z), res.basis, res.iterations,
                    res.dual_feasible)
