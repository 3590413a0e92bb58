"""Dense matrix validation and the small set of kernels used by the engine.

Matrices are plain ``numpy.ndarray`` objects of dtype float64, stored in
column-major (Fortran) order so single-column access is contiguous.
"""
from typing import NamedTuple

import numpy as np

from .exceptions import DimensionError, NonFiniteError, SvdConvergenceError

__all__ = [
    "SvdPair",
    "as_dense",
    "gram_column",
    "cross_gram_column",
    "mat_transpose_mat",
    "frobenius_sq",
    "top_k_svd",
]


class SvdPair(NamedTuple):
    """Leading left singular vectors ``U`` (m x k) and singular values ``sigma``."""

    U: np.ndarray
    sigma: np.ndarray


def as_dense(x, name="matrix"):
    """Return ``x`` as a finite, 2-D, column-major float64 array.

    1-D input is treated as a single column. No copy is made when ``x``
    already satisfies the layout.
    """
    a = np.asarray(x, dtype=np.float64)
    if a.ndim == 1:
        a = a[:, None]
    if a.ndim != 2:
        raise DimensionError(f"{name} must be 2-D, got ndim={a.ndim}")
    if a.shape[0] == 0 or a.shape[1] == 0:
        raise DimensionError(f"{name} must be non-empty, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        bad = np.argwhere(~np.isfinite(a))[0]
        raise NonFiniteError(f"{name} has a non-finite entry at {tuple(int(i) for i in bad)}")
    return np.asfortranarray(a)


def _check_col(A, j):
    if not 0 <= j < A.shape[1]:
        raise DimensionError(f"column index {j} out of range for {A.shape[1]} columns")


def gram_column(A, j):
    """Return ``A.T @ A[:, j]``, the j-th column of the Gram matrix."""
    A = as_dense(A, "A")
    _check_col(A, j)
    return A.T @ A[:, j]


def cross_gram_column(B, A, j):
    """Return ``B.T @ A[:, j]``."""
    A = as_dense(A, "A")
    B = as_dense(B, "B")
    if B.shape[0] != A.shape[0]:
        raise DimensionError(f"row mismatch: B has {B.shape[0]}, A has {A.shape[0]}")
    _check_col(A, j)
    return B.T @ A[:, j]


def mat_transpose_mat(X, Y):
    """Return ``X.T @ Y``."""
    X = as_dense(X, "X")
    Y = as_dense(Y, "Y")
    if X.shape[0] != Y.shape[0]:
        raise DimensionError(f"row mismatch: {X.shape[0]} vs {Y.shape[0]}")
    return X.T @ Y


def frobenius_sq(X):
    """Squared Frobenius norm (sum of squared entries)."""
    x = np.asarray(X, dtype=np.float64).ravel(order="K")
    return float(x @ x)


def top_k_svd(A, k):
    """Leading ``k`` singular triplets of ``A`` (left vectors and values).

    Uses LAPACK's divide-and-conquer SVD, falling back to the QR-iteration
    driver if that fails. Each column of ``U`` is sign-normalized so its
    largest-magnitude entry is positive, which makes the output
    deterministic across platforms.

    Parameters
    ----------
    A : array_like, shape (m, n)
    k : int
        Number of triplets, ``1 <= k <= min(m, n)``.

    Returns
    -------
    SvdPair
    """
    A = as_dense(A, "A")
    m, n = A.shape
    if not 1 <= k <= min(m, n):
        raise DimensionError(f"k={k} must lie in [1, {min(m, n)}]")
    import scipy.linalg

    try:
        U, s, _ = scipy.linalg.svd(A, full_matrices=False, lapack_driver="gesdd")
    except np.linalg.LinAlgError:
        try:
            U, s, _ = scipy.linalg.svd(A, full_matrices=False, lapack_driver="gesvd")
        except np.linalg.LinAlgError as exc:
            raise SvdConvergenceError(f"SVD did not converge (gesdd and gesvd): {exc}") from exc
    U = U[:, :k].copy(order="F")
    s = s[:k].copy()
    pivots = np.argmax(np.abs(U), axis=0)
    signs = np.sign(U[pivots, np.arange(k)])
    signs[signs == 0] = 1.0
    U *= signs
    return SvdPair(U, s)
