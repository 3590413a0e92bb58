"""Direct, slow reference computations for column subset selection.

Everything here materializes residuals and solves least-squares problems
from scratch. These routines are the ground truth the fast greedy engine is
tested against; they are not meant for large inputs.

Least squares uses LAPACK ``gelsy`` (complete orthogonal factorization with
column pivoting), which returns the minimum-norm solution when the selected
columns are linearly dependent. A :class:`RankDeficiencyWarning` is issued in
that case.
"""
import itertools
import math
import warnings

import numpy as np
import scipy.linalg

from .exceptions import DimensionError, RankDeficiencyWarning, SearchCapExceeded
from .matrix import as_dense, frobenius_sq

__all__ = [
    "projection_apply",
    "criterion",
    "residuals",
    "residual_scores",
    "naive_greedy",
    "exhaustive_best",
    "solve_coefficients",
    "check_projection_decomposition",
]

DEFAULT_SEARCH_CAP = 100_000


def _check_indices(S, n):
    S = [int(i) for i in S]
    if len(set(S)) != len(S):
        raise DimensionError(f"duplicate column indices in {S}")
    for i in S:
        if not 0 <= i < n:
            raise DimensionError(f"column index {i} out of range for {n} columns")
    return S


def _lstsq(M, X):
    """Minimum-norm least-squares solution of ``M @ T = X`` and the numerical rank."""
    cond = np.finfo(np.float64).eps * max(M.shape)
    T, _, rank, _ = scipy.linalg.lstsq(M, X, cond=cond, lapack_driver="gelsy")
    return T, rank


def _project(M, X):
    # Projection of X's columns onto span(M) without forming the m x m projector.
    T, rank = _lstsq(M, X)
    return M @ T, rank


def _warn_rank(rank, size):
    if rank < size:
        warnings.warn(
            f"selected columns have numerical rank {rank} < {size}; "
            "using the minimum-norm solution",
            RankDeficiencyWarning,
            stacklevel=3,
        )


def projection_apply(A, S, X):
    """Project the columns of ``X`` onto the span of ``A[:, S]``."""
    A = as_dense(A, "A")
    X = as_dense(X, "X")
    S = _check_indices(S, A.shape[1])
    if not S:
        raise DimensionError("index set must be non-empty")
    if X.shape[0] != A.shape[0]:
        raise DimensionError(f"row mismatch: X has {X.shape[0]}, A has {A.shape[0]}")
    PX, rank = _project(A[:, S], X)
    _warn_rank(rank, len(S))
    return PX


def criterion(A, S, B):
    """Reconstruction error ``||B - P_S B||_F^2``; ``||B||_F^2`` for empty ``S``."""
    B = as_dense(B, "B")
    if len(S) == 0:
        return frobenius_sq(B)
    return frobenius_sq(B - projection_apply(A, S, B))


def residuals(A, S, B):
    """Residual matrices ``E = A - P_S A`` and ``F = B - P_S B``."""
    A = as_dense(A, "A")
    B = as_dense(B, "B")
    if len(S) == 0:
        return A.copy(), B.copy()
    P = projection_apply(A, S, np.hstack([A, B]))
    n = A.shape[1]
    return A - P[:, :n], B - P[:, n:]


def residual_scores(A, S, B):
    """Greedy numerators and denominators computed from explicit residuals.

    Returns ``(f, g)`` with ``f[i] = ||F.T @ E[:, i]||^2`` and
    ``g[i] = ||E[:, i]||^2``.
    """
    E, F = residuals(A, S, B)
    H = F.T @ E
    return np.einsum("ij,ij->j", H, H), np.einsum("ij,ij->j", E, E)


def naive_greedy(A, B, l, eps_admit=1e-10, eps_tie=1e-12):
    """Greedy selection by direct evaluation of the criterion.

    At every step each admissible column is tried and the one giving the
    smallest reconstruction error is kept. A column is admissible when its
    residual squared norm exceeds ``eps_admit`` times the largest initial
    squared column norm. Candidates within ``eps_tie * ||B||_F^2`` of the
    best value count as tied, and the smallest index wins. Returns fewer than
    ``l`` indices if the admissible set runs out.
    """
    A = as_dense(A, "A")
    B = as_dense(B, "B")
    n = A.shape[1]
    if not 1 <= l <= n:
        raise DimensionError(f"l={l} must lie in [1, {n}]")
    if A.shape[0] != B.shape[0]:
        raise DimensionError(f"row mismatch: A has {A.shape[0]}, B has {B.shape[0]}")
    col_sq = np.einsum("ij,ij->j", A, A)
    threshold = eps_admit * col_sq.max()
    tie = eps_tie * frobenius_sq(B)
    S = []
    for _ in range(l):
        E = residuals(A, S, B)[0] if S else A
        marginal = np.einsum("ij,ij->j", E, E)
        candidates = [i for i in range(n) if i not in S and marginal[i] > threshold]
        if not candidates:
            break
        values = {i: criterion(A, S + [i], B) for i in candidates}
        best = min(values.values())
        S.append(next(i for i in candidates if values[i] <= best + tie))
    return S


def exhaustive_best(A, B, l, cap=DEFAULT_SEARCH_CAP):
    """Optimal size-``l`` subset by enumeration.

    Subsets are visited in lexicographic order and the first one reaching the
    minimum is kept.

    Returns
    -------
    (tuple of int, float)
        The subset and its criterion value.
    """
    A = as_dense(A, "A")
    B = as_dense(B, "B")
    n = A.shape[1]
    if not 1 <= l <= n:
        raise DimensionError(f"l={l} must lie in [1, {n}]")
    count = math.comb(n, l)
    if count > cap:
        raise SearchCapExceeded(f"C({n}, {l}) = {count} subsets exceeds cap {cap}")
    best_S, best_val = None, math.inf
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RankDeficiencyWarning)
        for S in itertools.combinations(range(n), l):
            val = criterion(A, S, B)
            if val < best_val:
                best_S, best_val = S, val
    return best_S, best_val


def solve_coefficients(A, S, B):
    """Least-squares coefficients ``T`` (|S| x r) with ``A[:, S] @ T ~= B``.

    For a single target vector these are the weights of the selected atoms
    in a sparse approximation.
    """
    A = as_dense(A, "A")
    B = as_dense(B, "B")
    S = _check_indices(S, A.shape[1])
    if not S:
        raise DimensionError("index set must be non-empty")
    if B.shape[0] != A.shape[0]:
        raise DimensionError(f"row mismatch: B has {B.shape[0]}, A has {A.shape[0]}")
    T, rank = _lstsq(A[:, S], B)
    _warn_rank(rank, len(S))
    return T


def check_projection_decomposition(A, P_set, S_set, probes):
    """Largest deviation from ``P_S x = P_P x + R_R x`` over probe columns.

    ``R_R`` projects onto the span of ``E[:, R]`` where ``E = A - P_P A`` and
    ``R = S \\ P``. Each deviation is scaled by ``max(1, ||x||)``.
    """
    A = as_dense(A, "A")
    X = as_dense(probes, "probes")
    n = A.shape[1]
    P_set = _check_indices(P_set, n)
    S_set = _check_indices(S_set, n)
    if not set(P_set) <= set(S_set):
        raise DimensionError(f"{P_set} is not a subset of {S_set}")
    if X.shape[0] != A.shape[0]:
        raise DimensionError(f"row mismatch: probes have {X.shape[0]}, A has {A.shape[0]}")
    R_set = [i for i in S_set if i not in P_set]

    lhs = projection_apply(A, S_set, X)
    if P_set:
        rhs = projection_apply(A, P_set, X)
        E_R = A[:, R_set] - projection_apply(A, P_set, A[:, R_set]) if R_set else None
    else:
        rhs = np.zeros_like(X)
        E_R = A[:, R_set]
    if R_set:
        RX, rank = _project(E_R, X)
        _warn_rank(rank, len(R_set))
        rhs = rhs + RX
    dev = np.linalg.norm(lhs - rhs, axis=0) / np.maximum(1.0, np.linalg.norm(X, axis=0))
    return float(dev.max())
