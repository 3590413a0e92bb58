"""Target matrices for the problems that reduce to generalized column subset selection.

=====================  =======================  ==================================
problem                source                   target
=====================  =======================  ==================================
column subset sel.     data matrix A            A                 (SelfTarget)
distributed CSS        data matrix A            A @ Omega         (RandomProjection)
feature clustering     data matrix A            group sums of A   (FeaturePartition)
SVD-based CSS          data matrix A            U_k diag(sigma_k) (SvdTarget)
(simultaneous) sparse  dictionary of atoms      signal(s) y       (ExternalTarget)
approximation
=====================  =======================  ==================================

Random targets draw from ``numpy.random.Generator(PCG64(seed))``, so a seed
reproduces the same matrix on every platform.
"""
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from .exceptions import DimensionError
from .matrix import as_dense, top_k_svd

__all__ = [
    "SelfTarget",
    "RandomProjection",
    "FeaturePartition",
    "SvdTarget",
    "ExternalTarget",
    "TargetSpec",
    "build_target",
    "random_projection_matrix",
    "partition_assignment",
]


@dataclass(frozen=True)
class SelfTarget:
    pass


@dataclass(frozen=True)
class RandomProjection:
    """B = A @ Omega, Omega n x r with i.i.d. N(0, 1/r) entries."""

    r: int
    seed: int = 0


@dataclass(frozen=True)
class FeaturePartition:
    """Columns of A are split into ``c`` random groups; B holds the group sums."""

    c: int
    seed: int = 0


@dataclass(frozen=True)
class SvdTarget:
    """B = U_k diag(sigma_k). ``k=None`` means "use the number of columns to select"."""

    k: Optional[int] = None


@dataclass(frozen=True, eq=False)
class ExternalTarget:
    """A user supplied target: one signal per column."""

    matrix: np.ndarray


TargetSpec = Union[SelfTarget, RandomProjection, FeaturePartition, SvdTarget, ExternalTarget]


def _rng(seed):
    return np.random.Generator(np.random.PCG64(seed))


def random_projection_matrix(n, r, seed):
    """Gaussian sketching matrix of shape (n, r) scaled by ``1/sqrt(r)``."""
    return _rng(seed).standard_normal((n, r)) / np.sqrt(r)


def partition_assignment(n, c, seed):
    """Group label in ``[0, c)`` for each of ``n`` columns, drawn uniformly.

    Groups may end up empty.
    """
    return _rng(seed).integers(0, c, size=n)


def build_target(A, spec, l=None):
    """Build the target matrix ``B`` for source ``A``.

    Parameters
    ----------
    A : array_like, shape (m, n)
    spec : TargetSpec
    l : int, optional
        Number of columns that will be selected; used as ``k`` for an
        :class:`SvdTarget` without an explicit ``k``.
    """
    A = as_dense(A, "A")
    m, n = A.shape
    if isinstance(spec, SelfTarget):
        return A
    if isinstance(spec, RandomProjection):
        if spec.r < 1:
            raise ValueError(f"projection width r={spec.r} must be >= 1")
        return A @ random_projection_matrix(n, spec.r, spec.seed)
    if isinstance(spec, FeaturePartition):
        if not 1 <= spec.c <= n:
            raise ValueError(f"number of groups c={spec.c} must lie in [1, {n}]")
        labels = partition_assignment(n, spec.c, spec.seed)
        B = np.zeros((m, spec.c), order="F")
        for j, label in enumerate(labels):
            B[:, label] += A[:, j]
        return B
    if isinstance(spec, SvdTarget):
        k = spec.k if spec.k is not None else l
        if k is None:
            raise ValueError("SvdTarget needs k, or l to default it")
        if not 1 <= k <= min(m, n):
            raise ValueError(f"rank k={k} must lie in [1, {min(m, n)}]")
        U, sigma = top_k_svd(A, k)
        return np.asfortranarray(U * sigma)
    if isinstance(spec, ExternalTarget):
        B = as_dense(spec.matrix, "target")
        if B.shape[0] != m:
            raise DimensionError(f"target has {B.shape[0]} rows, source has {m}")
        return B
    raise TypeError(f"unknown target spec {spec!r}")
