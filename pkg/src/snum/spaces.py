"""Finite-dimensional sequence spaces, vectors, operators, and exact operator norms.

Spaces are R^dim with an l_p norm, p restricted to {1, 2, inf} so that unit
balls are either polyhedral with a known vertex set or Euclidean with an exact
spectral theory.  Everything here is immutable and pure; randomized fallbacks
take explicit seeds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import NotPolyhedral, VertexCapExceeded

VERTEX_CAP = 16
EXACT_TOL = 1e-9

_ALLOWED_P = (1.0, 2.0, math.inf)


def _canon_p(p) -> float:
    if p in ("inf", "oo", "infinity"):
        return math.inf
    q = float(p)
    if q not in _ALLOWED_P:
        raise ValueError(f"norm exponent must be 1, 2 or inf, got {p!r}")
    return q


def dual_exponent(p: float) -> float:
    p = _canon_p(p)
    if p == 1.0:
        return math.inf
    if p == math.inf:
        return 1.0
    return 2.0


@dataclass(frozen=True)
class NormedSpace:
    """R^dim with the l_p norm; p in {1, 2, inf}."""

    dim: int
    p: float

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dim must be >= 1")
        object.__setattr__(self, "p", _canon_p(self.p))

    def dual(self) -> "NormedSpace":
        return NormedSpace(self.dim, dual_exponent(self.p))

    @property
    def polyhedral(self) -> bool:
        return self.p in (1.0, math.inf)

    def norm(self, coords) -> float:
        return lp_norm(np.asarray(coords, dtype=float), self.p)

    def __str__(self):
        tag = "inf" if self.p == math.inf else f"{int(self.p)}"
        return f"l{tag}^{self.dim}"


def lp_norm(coords: np.ndarray, p: float) -> float:
    p = _canon_p(p)
    a = np.abs(np.asarray(coords, dtype=float))
    if p == 1.0:
        return float(a.sum())
    if p == 2.0:
        return float(np.sqrt((a * a).sum()))
    return float(a.max()) if a.size else 0.0


def _frozen_array(a) -> np.ndarray:
    arr = np.array(a, dtype=float)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class Vector:
    coords: np.ndarray
    space: NormedSpace

    def __post_init__(self):
        arr = _frozen_array(self.coords)
        if arr.ndim != 1 or arr.shape[0] != self.space.dim:
            raise ValueError(
                f"coords length {arr.shape} does not match space dim {self.space.dim}"
            )
        object.__setattr__(self, "coords", arr)

    def norm(self) -> float:
        return lp_norm(self.coords, self.space.p)


def vector_norm(x: Vector) -> float:
    """l_p norm of x in its own space."""
    return x.norm()


@dataclass(frozen=True)
class LinearOperator:
    """Dense matrix with explicit domain and codomain spaces.

    matrix has shape (codomain.dim, domain.dim); apply() is matrix-vector
    product; adjoint() is the transpose acting between the dual spaces.
    """

    matrix: np.ndarray
    domain: NormedSpace
    codomain: NormedSpace

    def __post_init__(self):
        mat = np.array(self.matrix, dtype=float)
        if mat.ndim != 2:
            raise ValueError("matrix must be 2-dimensional")
        if mat.shape != (self.codomain.dim, self.domain.dim):
            raise ValueError(
                f"matrix shape {mat.shape} does not match spaces "
                f"({self.codomain.dim}, {self.domain.dim})"
            )
        mat.setflags(write=False)
        object.__setattr__(self, "matrix", mat)

    def apply(self, x) -> Vector:
        coords = np.asarray(x.coords if isinstance(x, Vector) else x, dtype=float)
        return Vector(self.matrix @ coords, self.codomain)

    def adjoint(self) -> "LinearOperator":
        return LinearOperator(self.matrix.T, self.codomain.dual(), self.domain.dual())

    def compose(self, inner: "LinearOperator") -> "LinearOperator":
        """self after inner (inner.codomain must equal self.domain)."""
        if inner.codomain != self.domain:
            raise ValueError("composition space mismatch")
        return LinearOperator(self.matrix @ inner.matrix, inner.domain, self.codomain)

    def __add__(self, other: "LinearOperator") -> "LinearOperator":
        if other.domain != self.domain or other.codomain != self.codomain:
            raise ValueError("operator sum requires identical spaces")
        return LinearOperator(self.matrix + other.matrix, self.domain, self.codomain)

    def __sub__(self, other: "LinearOperator") -> "LinearOperator":
        return self + (-1.0) * other

    def __rmul__(self, scalar: float) -> "LinearOperator":
        return LinearOperator(float(scalar) * self.matrix, self.domain, self.codomain)

    def rank(self, rel_tol: float = 1e-10) -> int:
        from .jacobi import jacobi_svd

        s, _, _ = jacobi_svd(self.matrix)
        if s.size == 0 or s[0] <= 0.0:
            return 0
        return int(np.count_nonzero(s > rel_tol * s[0]))


def adjoint(T: LinearOperator) -> LinearOperator:
    """Transpose of T acting between the dual spaces."""
    return T.adjoint()


def identity_operator(domain: NormedSpace, codomain: NormedSpace | None = None) -> LinearOperator:
    cod = codomain if codomain is not None else domain
    if cod.dim != domain.dim:
        raise ValueError("identity needs equal dims")
    return LinearOperator(np.eye(domain.dim), domain, cod)


def diagonal_operator(entries, domain: NormedSpace, codomain: NormedSpace | None = None) -> LinearOperator:
    entries = np.asarray(entries, dtype=float)
    cod = codomain if codomain is not None else domain
    return LinearOperator(np.diag(entries), domain, cod)


def random_operator(rng: np.random.Generator, domain: NormedSpace, codomain: NormedSpace,
                    scale: float = 1.0) -> LinearOperator:
    mat = scale * rng.standard_normal((codomain.dim, domain.dim))
    return LinearOperator(mat, domain, codomain)


def identity_norm_factor(dim: int, p_from: float, p_to: float) -> float:
    """Norm of the identity l_p^dim -> l_q^dim: dim^max(0, 1/q - 1/p)."""
    p = _canon_p(p_from)
    q = _canon_p(p_to)
    inv = (0.0 if q == math.inf else 1.0 / q) - (0.0 if p == math.inf else 1.0 / p)
    return float(dim ** max(0.0, inv))


def extreme_points(space: NormedSpace, vertex_cap: int = VERTEX_CAP) -> list[Vector]:
    """Extreme points of the unit ball: +-e_j for l1, sign vectors for linf."""
    if space.p == 2.0:
        raise NotPolyhedral("the Euclidean ball has no finite vertex set")
    if space.p == 1.0:
        pts = []
        for j in range(space.dim):
            for sgn in (1.0, -1.0):
                e = np.zeros(space.dim)
                e[j] = sgn
                pts.append(Vector(e, space))
        return pts
    if space.dim > vertex_cap:
        raise VertexCapExceeded(
            f"2^{space.dim} sign vertices exceed cap 2^{vertex_cap}"
        )
    pts = []
    for bits in range(2 ** space.dim):
        s = np.ones(space.dim)
        for i in range(space.dim):
            if bits >> i & 1:
                s[i] = -1.0
        pts.append(Vector(s, space))
    return pts


def ball_vertices_half(space: NormedSpace, vertex_cap: int = VERTEX_CAP) -> np.ndarray:
    """One vertex per antipodal pair, as rows.  Internal fast path for sup of
    even functions (norms of images) over the unit ball."""
    if space.p == 2.0:
        raise NotPolyhedral("the Euclidean ball has no finite vertex set")
    if space.p == 1.0:
        return np.eye(space.dim)
    if space.dim > vertex_cap:
        raise VertexCapExceeded(
            f"2^{space.dim} sign vertices exceed cap 2^{vertex_cap}"
        )
    if space.dim == 1:
        return np.ones((1, 1))
    k = space.dim - 1
    grid = ((np.arange(2 ** k)[:, None] >> np.arange(k)[None, :]) & 1) * -2.0 + 1.0
    return np.hstack([np.ones((2 ** k, 1)), grid])


@dataclass(frozen=True)
class NormBracket:
    """Certified [lower, upper] for an operator norm; witness attains lower."""

    lower: float
    upper: float
    exact: bool
    witness: Vector | None = None

    def __post_init__(self):
        if self.lower > self.upper + EXACT_TOL:
            raise ValueError("bracket lower exceeds upper")

    @property
    def width(self) -> float:
        return self.upper - self.lower

    @property
    def value(self) -> float:
        """Midpoint; equals the exact value when exact."""
        return 0.5 * (self.lower + self.upper)


def _norming_vector(phi: np.ndarray, space: NormedSpace) -> np.ndarray:
    # x in B_space with <phi, x> = ||phi||_{space.dual()}
    if space.p == 1.0:
        j = int(np.argmax(np.abs(phi)))
        x = np.zeros(space.dim)
        x[j] = math.copysign(1.0, phi[j]) if phi[j] != 0 else 1.0
        return x
    if space.p == math.inf:
        return np.where(phi >= 0, 1.0, -1.0)
    n = lp_norm(phi, 2.0)
    return phi / n if n > 0 else _unit_first(space.dim)


def _unit_first(dim: int) -> np.ndarray:
    e = np.zeros(dim)
    e[0] = 1.0
    return e


def _exact_norm_direct(mat: np.ndarray, dom: NormedSpace, cod: NormedSpace,
                       vertex_cap: int):
    """(value, witness coords) via a closed form, or None if no direct form applies."""
    if dom.p == 1.0:
        col_norms = [lp_norm(mat[:, j], cod.p) for j in range(dom.dim)]
        j = int(np.argmax(col_norms))
        x = np.zeros(dom.dim)
        x[j] = 1.0
        return col_norms[j], x
    if cod.p == math.inf:
        row_norms = [lp_norm(mat[i, :], dual_exponent(dom.p)) for i in range(cod.dim)]
        i = int(np.argmax(row_norms))
        return row_norms[i], _norming_vector(mat[i, :], dom)
    if dom.p == 2.0 and cod.p == 2.0:
        from .jacobi import jacobi_svd

        s, _, vt = jacobi_svd(mat)
        return float(s[0]) if s.size else 0.0, (vt[0, :] if s.size else _unit_first(dom.dim))
    if dom.p == math.inf and dom.dim <= vertex_cap:
        verts = ball_vertices_half(dom, vertex_cap)
        vals = [lp_norm(mat @ v, cod.p) for v in verts]
        i = int(np.argmax(vals))
        return vals[i], verts[i]
    return None


def _bracket_lower_ascent(mat: np.ndarray, dom: NormedSpace, cod: NormedSpace,
                          seed: int, restarts: int):
    """Multi-start ascent of ||Tx|| over the unit ball; returns (value, x)."""
    best_val, best_x = -1.0, _unit_first(dom.dim)
    for k in range(restarts):
        rng = np.random.default_rng([seed, k])
        if dom.p == math.inf:
            x = np.where(rng.standard_normal(dom.dim) >= 0, 1.0, -1.0)
            improved = True
            while improved:
                improved = False
                base = lp_norm(mat @ x, cod.p)
                for i in range(dom.dim):
                    x[i] = -x[i]
                    cand = lp_norm(mat @ x, cod.p)
                    if cand > base + 1e-15:
                        base = cand
                        improved = True
                    else:
                        x[i] = -x[i]
            val = lp_norm(mat @ x, cod.p)
        else:
            # p = 2 domain: alternate x <- normalize(T^t g), g a subgradient of
            # ||.||_cod at Tx.
            x = rng.standard_normal(dom.dim)
            x /= max(lp_norm(x, 2.0), 1e-300)
            for _ in range(60):
                y = mat @ x
                if cod.p == 1.0:
                    g = np.where(y >= 0, 1.0, -1.0)
                elif cod.p == math.inf:
                    g = np.zeros(cod.dim)
                    g[int(np.argmax(np.abs(y)))] = math.copysign(1.0, y[int(np.argmax(np.abs(y)))])
                else:
                    n = lp_norm(y, 2.0)
                    g = y / n if n > 0 else np.zeros(cod.dim)
                xn = mat.T @ g
                nn = lp_norm(xn, 2.0)
                if nn <= 1e-300:
                    break
                xn /= nn
                if lp_norm(xn - x, 2.0) < 1e-14:
                    x = xn
                    break
                x = xn
            val = lp_norm(mat @ x, cod.p)
        if val > best_val:
            best_val, best_x = val, x.copy()
    return best_val, best_x


def operator_norm(T: LinearOperator, *, bracket: bool = False,
                  vertex_cap: int = VERTEX_CAP, seed: int = 0,
                  restarts: int = 16) -> NormBracket:
    """Operator norm with an exactness certificate.

    Exact when a closed form applies to T or to its adjoint (column norms for
    l1 domains, dual row norms for linf codomains, largest singular value for
    l2 -> l2, sign-vertex enumeration for linf domains within vertex_cap).
    Otherwise a certified bracket: lower from multi-start ascent, upper from
    the best exact-case norm scaled by the identity-embedding factors.
    Raises VertexCapExceeded when the only blocked route is a too-large
    sign enumeration and no bracket was requested.
    """
    mat, dom, cod = T.matrix, T.domain, T.codomain

    hit = _exact_norm_direct(mat, dom, cod, vertex_cap)
    if hit is not None:
        val, x = hit
        return NormBracket(val, val, True, Vector(x, dom))

    hit = _exact_norm_direct(mat.T, cod.dual(), dom.dual(), vertex_cap)
    if hit is not None:
        val, y = hit
        phi = mat.T @ y
        return NormBracket(val, val, True, Vector(_norming_vector(phi, dom), dom))

    if not bracket and dom.p == math.inf and dom.dim > vertex_cap:
        raise VertexCapExceeded(
            f"domain linf^{dom.dim} exceeds vertex_cap {vertex_cap}; "
            "pass bracket=True for a certified bracket"
        )

    lower, x = _bracket_lower_ascent(mat, dom, cod, seed, restarts)
    upper = math.inf
    for p2 in _ALLOWED_P:
        for q2 in _ALLOWED_P:
            sub = NormedSpace(dom.dim, p2)
            if sub.p == math.inf and sub.dim > vertex_cap:
                continue
            hit = _exact_norm_direct(mat, sub, NormedSpace(cod.dim, q2), vertex_cap)
            if hit is None:
                continue
            factor = (identity_norm_factor(dom.dim, dom.p, p2)
                      * identity_norm_factor(cod.dim, q2, cod.p))
            upper = min(upper, factor * hit[0])
    lower = min(lower, upper)
    return NormBracket(lower, upper, False, Vector(x, dom))
