import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from snum.errors import NotPolyhedral, VertexCapExceeded
from snum.spaces import (
    LinearOperator,
    NormedSpace,
    Vector,
    adjoint,
    extreme_points,
    identity_norm_factor,
    identity_operator,
    operator_norm,
    vector_norm,
)

L1_3 = NormedSpace(3, 1)
L2_3 = NormedSpace(3, 2)
LINF_3 = NormedSpace(3, math.inf)


def test_vector_norms_pythagorean():
    v = Vector([1, -2, 2], L2_3)
    assert vector_norm(v) == pytest.approx(3.0, abs=1e-12)


def test_vector_norms_l1():
    assert vector_norm(Vector([1, -2, 2], L1_3)) == pytest.approx(5.0, abs=1e-12)


def test_vector_norms_zero_linf():
    assert vector_norm(Vector([0, 0, 0], LINF_3)) == 0.0


def test_dual_involution():
    for p in (1, 2, math.inf):
        s = NormedSpace(4, p)
        assert s.dual().dual() == s
    assert NormedSpace(2, 1).dual().p == math.inf
    assert NormedSpace(2, 2).dual().p == 2.0


def test_adjoint_transposes_between_duals():
    dom = NormedSpace(2, 1)
    cod = NormedSpace(2, math.inf)
    T = LinearOperator([[1, 2], [3, 4]], dom, cod)
    Ts = adjoint(T)
    assert Ts.domain == NormedSpace(2, 1)
    assert Ts.codomain == NormedSpace(2, math.inf)
    np.testing.assert_array_equal(Ts.matrix, [[1, 3], [2, 4]])


def test_adjoint_symmetric_matrix_fixed():
    mat = np.array([[2.0, 1.0, 0.0], [1.0, 3.0, 1.0], [0.0, 1.0, 4.0]])
    T = LinearOperator(mat, L2_3, L2_3)
    np.testing.assert_array_equal(adjoint(T).matrix, mat)


def test_adjoint_involution():
    rng = np.random.default_rng(7)
    for p, q in [(1, math.inf), (2, 2), (math.inf, 1), (1, 2)]:
        T = LinearOperator(rng.standard_normal((3, 2)),
                           NormedSpace(2, p), NormedSpace(3, q))
        Tss = adjoint(adjoint(T))
        np.testing.assert_array_equal(Tss.matrix, T.matrix)
        assert Tss.domain == T.domain and Tss.codomain == T.codomain


def test_extreme_points_cross_polytope():
    pts = {tuple(v.coords) for v in extreme_points(NormedSpace(2, 1))}
    assert pts == {(1, 0), (-1, 0), (0, 1), (0, -1)}


def test_extreme_points_cube():
    pts = {tuple(v.coords) for v in extreme_points(NormedSpace(2, math.inf))}
    assert pts == {(1, 1), (1, -1), (-1, 1), (-1, -1)}


def test_extreme_points_euclidean_rejected():
    with pytest.raises(NotPolyhedral):
        extreme_points(NormedSpace(2, 2))


def test_extreme_points_cap():
    with pytest.raises(VertexCapExceeded):
        extreme_points(NormedSpace(17, math.inf), vertex_cap=16)


def brute_vertex_norm(T):
    """Independent enumeration over the full extreme point set."""
    best = 0.0
    for v in extreme_points(T.domain):
        best = max(best, T.apply(v).norm())
    return best


def test_operator_norm_identity_linf_to_l1():
    T = identity_operator(NormedSpace(2, math.inf), NormedSpace(2, 1))
    b = operator_norm(T)
    assert b.exact and b.lower == pytest.approx(2.0, abs=1e-12)


def test_operator_norm_l1_l1_matches_enumeration():
    dom = NormedSpace(2, 1)
    T = LinearOperator([[1, 2], [3, 4]], dom, dom)
    expected = brute_vertex_norm(T)     # oracle: 4 signed basis vectors
    assert expected == pytest.approx(6.0, abs=1e-12)
    b = operator_norm(T)
    assert b.exact and b.lower == pytest.approx(expected, abs=1e-12)


def test_operator_norm_diag_l2():
    T = LinearOperator(np.diag([3.0, 2.0, 1.0]), L2_3, L2_3)
    b = operator_norm(T)
    assert b.exact and b.lower == pytest.approx(3.0, abs=1e-9)


@pytest.mark.parametrize("p", [1, 2, math.inf])
@pytest.mark.parametrize("q", [1, 2, math.inf])
def test_operator_norm_witness_attains(p, q):
    rng = np.random.default_rng(11)
    dom, cod = NormedSpace(3, p), NormedSpace(4, q)
    T = LinearOperator(rng.standard_normal((4, 3)), dom, cod)
    b = operator_norm(T)
    x = b.witness
    assert x.norm() <= 1 + 1e-12
    assert T.apply(x).norm() >= b.lower - 1e-9


@pytest.mark.parametrize("p", [1, 2, math.inf])
@pytest.mark.parametrize("q", [1, 2, math.inf])
def test_operator_norm_adjoint_duality(p, q):
    rng = np.random.default_rng(5)
    dom, cod = NormedSpace(3, p), NormedSpace(3, q)
    T = LinearOperator(rng.standard_normal((3, 3)), dom, cod)
    a = operator_norm(T)
    b = operator_norm(adjoint(T))
    assert a.exact and b.exact
    assert a.lower == pytest.approx(b.lower, abs=1e-9)


def test_operator_norm_polyhedral_agrees_with_enumeration():
    rng = np.random.default_rng(3)
    for p in (1, math.inf):
        for q in (1, 2, math.inf):
            dom, cod = NormedSpace(3, p), NormedSpace(4, q)
            T = LinearOperator(rng.standard_normal((4, 3)), dom, cod)
            b = operator_norm(T)
            assert b.exact
            assert b.lower == pytest.approx(brute_vertex_norm(T), abs=1e-10)


def test_operator_norm_vertex_cap_error_and_bracket():
    dom = NormedSpace(18, math.inf)
    cod = NormedSpace(18, 2)
    rng = np.random.default_rng(0)
    T = LinearOperator(rng.standard_normal((18, 18)), dom, cod)
    with pytest.raises(VertexCapExceeded):
        operator_norm(T)
    b = operator_norm(T, bracket=True)
    assert not b.exact
    assert b.lower <= b.upper
    assert T.apply(b.witness).norm() >= b.lower - 1e-9


@settings(max_examples=40, deadline=None)
@given(scale=st.floats(min_value=-4, max_value=4),
       seed=st.integers(min_value=0, max_value=2 ** 16))
def test_operator_norm_homogeneity(scale, seed):
    rng = np.random.default_rng(seed)
    dom, cod = NormedSpace(3, 1), NormedSpace(3, math.inf)
    T = LinearOperator(rng.standard_normal((3, 3)), dom, cod)
    lhs = operator_norm(scale * T).lower
    rhs = abs(scale) * operator_norm(T).lower
    assert lhs == pytest.approx(rhs, abs=1e-9, rel=1e-9)


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(min_value=0, max_value=2 ** 16))
def test_operator_norm_triangle(seed):
    rng = np.random.default_rng(seed)
    dom, cod = NormedSpace(3, math.inf), NormedSpace(3, 1)
    S = LinearOperator(rng.standard_normal((3, 3)), dom, cod)
    T = LinearOperator(rng.standard_normal((3, 3)), dom, cod)
    assert (operator_norm(S + T).lower
            <= operator_norm(S).lower + operator_norm(T).lower + 1e-9)


def test_identity_norm_factor_values():
    assert identity_norm_factor(4, 2, 1) == pytest.approx(2.0)
    assert identity_norm_factor(4, math.inf, 2) == pytest.approx(2.0)
    assert identity_norm_factor(4, 1, 2) == 1.0
    assert identity_norm_factor(9, math.inf, 1) == pytest.approx(9.0)
