import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from padebary.errors import InvalidInput, SingularMatrix
from padebary.numkernel import (
    EPS,
    TOL_SOLVE,
    Polynomial,
    poly_derivative,
    poly_eval,
    poly_roots,
    solve_dense,
)


def test_solve_identity():
    np.testing.assert_array_equal(solve_dense(np.eye(3), [1, 2, 3]), [1, 2, 3])


def test_solve_prony_2x2():
    # hand solution: 8x + 14y = -5, 14x + 26y = -8  ->  x = -3/2, y = 1/2
    x = solve_dense([[8, 14], [14, 26]], [-5, -8])
    np.testing.assert_allclose(x, [-1.5, 0.5], rtol=0, atol=1e-14)


def test_solve_rank_deficient():
    with pytest.raises(SingularMatrix):
        solve_dense([[1, 1], [2, 2]], [1, 0])


def test_solve_needs_pivoting():
    x = solve_dense([[0, 1], [1, 0]], [2, 3])
    np.testing.assert_array_equal(x, [3, 2])


def test_solve_shape_errors():
    with pytest.raises(InvalidInput):
        solve_dense(np.ones((2, 3)), [1, 2])
    with pytest.raises(InvalidInput):
        solve_dense(np.eye(2), [1, 2, 3])
    with pytest.raises(InvalidInput):
        solve_dense([[np.nan, 0], [0, 1]], [1, 1])


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 12), st.integers(0, 2**32 - 1))
def test_solve_residual_bound(n, seed):
    rng = np.random.default_rng(seed)
    A = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    if np.linalg.cond(A) >= 1e6:
        return
    b = rng.normal(size=n) + 1j * rng.normal(size=n)
    x = solve_dense(A, b)
    res = np.max(np.abs(A @ x - b))
    bound = TOL_SOLVE * np.max(np.abs(A).sum(axis=1)) * np.max(np.abs(x))
    assert res <= bound


def test_roots_examples():
    np.testing.assert_allclose(poly_roots([1, 1]), [-1])
    r = np.sort_complex(poly_roots([2, -3, 1]))
    np.testing.assert_allclose(r, [1, 2], atol=1e-14)


def test_double_root_reported_twice():
    r = poly_roots([1, -2, 1])
    assert len(r) == 2
    np.testing.assert_allclose(r, [1, 1], atol=1e-12)


def test_triple_root_merged():
    # (x - 2)^3
    r = poly_roots([-8, 12, -6, 1])
    np.testing.assert_allclose(r, [2, 2, 2], atol=1e-10)


def test_close_simple_roots_not_merged():
    a, b = 1.0, 1.0 + 1e-6
    r = np.sort_complex(poly_roots([a * b, -(a + b), 1]))
    assert abs(r[1] - r[0]) > 5e-7


def test_roots_reject_bad_input():
    with pytest.raises(InvalidInput):
        poly_roots([3])
    with pytest.raises(InvalidInput):
        poly_roots([1, 2, 0])


complex_small = st.builds(
    complex, st.floats(-10, 10, allow_nan=False), st.floats(-10, 10, allow_nan=False)
).filter(lambda z: abs(z) <= 10)


@settings(max_examples=200, deadline=None)
@given(complex_small, complex_small)
def test_quadratic_roots_recovered(alpha, beta):
    if abs(alpha - beta) < 1e-3:
        return
    coeffs = [alpha * beta, -(alpha + beta), 1]
    r = poly_roots(coeffs)
    # match as multisets
    if abs(r[0] - alpha) + abs(r[1] - beta) > abs(r[0] - beta) + abs(r[1] - alpha):
        r = r[::-1]
    np.testing.assert_allclose(r, [alpha, beta], rtol=0, atol=1e-8)
    bound = 1e-8 * max(map(abs, coeffs)) * np.maximum(1, np.abs(r)) ** 2
    assert np.all(np.abs(poly_eval(coeffs, r)) <= bound)


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 8), st.integers(0, 2**32 - 1))
def test_random_roots_residual(d, seed):
    rng = np.random.default_rng(seed)
    c = rng.normal(size=d + 1) + 1j * rng.normal(size=d + 1)
    r = poly_roots(c)
    assert len(r) == d
    bound = 1e-8 * np.max(np.abs(c)) * np.maximum(1, np.abs(r)) ** d
    assert np.all(np.abs(poly_eval(c, r)) <= bound)


def test_eval_and_derivative():
    assert poly_eval([1, 1, 1], 2) == 7
    assert poly_derivative([2, -3, 1]) == Polynomial([-3, 2])
    assert poly_eval(poly_derivative([2, -3, 1]), 1) == -1
    assert poly_derivative([5]) == Polynomial([0])


def test_eval_vectorized():
    t = np.array([0.0, 1.0, -2.0])
    np.testing.assert_array_equal(Polynomial([1, 0, 1])(t), [1, 2, 5])


def test_polynomial_arithmetic():
    p = Polynomial([1, 1])
    q = Polynomial([1, -1])
    assert p * q == Polynomial([1, 0, -1])
    assert p + Polynomial([0, 0, 3]) == Polynomial([1, 1, 3])
    assert p.shift_up(2) == Polynomial([0, 0, 1, 1])
    assert Polynomial([1, 2, 0, 0]).trim() == Polynomial([1, 2])
    assert Polynomial([]).degree == 0


def test_eps_constant():
    assert TOL_SOLVE == pytest.approx(1e3 * EPS)
