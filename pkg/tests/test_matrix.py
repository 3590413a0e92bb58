import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from gcss.exceptions import DimensionError, NonFiniteError
from gcss.matrix import as_dense, cross_gram_column, frobenius_sq, gram_column, mat_transpose_mat, top_k_svd


def brute_xty(X, Y):
    out = np.zeros((X.shape[1], Y.shape[1]))
    for i in range(X.shape[1]):
        for c in range(Y.shape[1]):
            for k in range(X.shape[0]):
                out[i, c] += X[k, i] * Y[k, c]
    return out


def matrices(max_side=6):
    shape = st.tuples(st.integers(1, max_side), st.integers(1, max_side))
    return shape.flatmap(lambda s: arrays(np.float64, s, elements=st.floats(-1, 1)))


def test_as_dense_rejects_non_finite():
    with pytest.raises(NonFiniteError):
        as_dense([[1.0, np.nan]])
    with pytest.raises(NonFiniteError):
        as_dense([[np.inf]])


def test_as_dense_layout():
    a = as_dense([[1, 2], [3, 4]])
    assert a.dtype == np.float64 and a.flags.f_contiguous
    assert as_dense([1.0, 2.0]).shape == (2, 1)
    with pytest.raises(DimensionError):
        as_dense(np.zeros((0, 3)))


def test_gram_column(example):
    assert np.array_equal(gram_column(example, 2), brute_xty(example, example)[:, 2])
    assert np.array_equal(gram_column(example, 2), [1, 1, 2])
    assert np.array_equal(gram_column(np.eye(3), 0), [1, 0, 0])
    assert np.array_equal(gram_column(np.zeros((2, 2)), 1), [0, 0])
    with pytest.raises(DimensionError):
        gram_column(example, 3)


def test_cross_gram_column(example):
    assert np.array_equal(cross_gram_column(example, example, 2), gram_column(example, 2))
    assert np.array_equal(cross_gram_column([[1.0], [0.0]], np.eye(2), 0), [1])
    assert np.array_equal(cross_gram_column(np.zeros((2, 4)), example, 1), np.zeros(4))
    with pytest.raises(DimensionError):
        cross_gram_column(np.ones((3, 1)), example, 0)
    with pytest.raises(DimensionError):
        cross_gram_column(example, example, -1)


def test_mat_transpose_mat(example):
    expected = brute_xty(example, example)
    assert np.array_equal(expected, [[1, 0, 1], [0, 1, 1], [1, 1, 2]])
    assert np.array_equal(mat_transpose_mat(example, example), expected)
    Y = np.array([[0.5, -2.0, 3.0], [7.0, 0.25, -1.0]])
    assert np.array_equal(mat_transpose_mat(np.eye(2), Y), Y)
    assert np.array_equal(mat_transpose_mat(np.zeros((2, 2)), Y), np.zeros((2, 3)))
    with pytest.raises(DimensionError):
        mat_transpose_mat(np.eye(2), np.eye(3))


def test_frobenius_sq(example):
    assert frobenius_sq(example) == 4.0
    assert frobenius_sq(np.zeros((3, 2))) == 0.0
    assert frobenius_sq(np.eye(3)) == 3.0


def test_top_k_svd_examples(example):
    U, s = top_k_svd(np.diag([3.0, 2.0]), 1)
    assert np.allclose(np.abs(U[:, 0]), [1, 0], atol=1e-12)
    assert np.allclose(s, [3.0])
    _, s = top_k_svd(np.eye(2), 2)
    assert np.allclose(s, [1, 1])
    # eigenvalues of A A^T = [[2, 1], [1, 2]] are 3 and 1
    _, s = top_k_svd(example, 2)
    assert np.allclose(s, [np.sqrt(3), 1.0], rtol=1e-12)
    with pytest.raises(DimensionError):
        top_k_svd(example, 3)
    with pytest.raises(DimensionError):
        top_k_svd(example, 0)


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_gram_properties(A):
    n = A.shape[1]
    for j in range(n):
        col = gram_column(A, j)
        assert col[j] >= 0
        assert col[j] == pytest.approx(A[:, j] @ A[:, j], rel=1e-12, abs=1e-300)
    G = mat_transpose_mat(A, A)
    assert np.max(np.abs(G - G.T)) <= 1e-12
    total = sum(gram_column(A, j)[j] for j in range(n))
    assert frobenius_sq(A) == pytest.approx(total, rel=1e-12, abs=1e-300)


@pytest.mark.parametrize("seed", range(20))
def test_top_k_svd_tail_energy(seed):
    rng = np.random.default_rng(seed)
    m, n = rng.integers(1, 21, size=2)
    A = rng.uniform(-1, 1, (m, n))
    k = int(rng.integers(1, min(m, n) + 1))
    U, s = top_k_svd(A, k)
    assert np.allclose(U.T @ U, np.eye(k), atol=1e-10)
    assert np.all(s >= 0) and np.all(np.diff(s) <= 0)
    full = np.linalg.svd(A, compute_uv=False)
    assert np.allclose(s, full[:k], rtol=1e-8)
    resid = frobenius_sq(A - U @ (U.T @ A))
    tail = float(np.sum(full[k:] ** 2))
    assert resid == pytest.approx(tail, rel=1e-8, abs=1e-8 * frobenius_sq(A))
