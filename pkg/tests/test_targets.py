import numpy as np
import pytest

from gcss.greedy import greedy_select, init_state
from gcss.oracle import criterion, naive_greedy
from gcss.targets import (
    ExternalTarget,
    FeaturePartition,
    RandomProjection,
    SelfTarget,
    SvdTarget,
    build_target,
    partition_assignment,
    random_projection_matrix,
)


def test_self_target(example):
    B = build_target(example, SelfTarget())
    assert np.array_equal(B, example)


def test_svd_target_diagonal():
    B = build_target(np.diag([3.0, 2.0]), SvdTarget(1))
    assert B.shape == (2, 1)
    assert np.allclose(np.abs(B[:, 0]), [3.0, 0.0], atol=1e-12)


def test_svd_target_defaults_k_to_l(rng):
    A = rng.uniform(-1, 1, (6, 8))
    assert build_target(A, SvdTarget(), l=3).shape == (6, 3)
    with pytest.raises(ValueError):
        build_target(A, SvdTarget())


def test_feature_partition_single_group(example):
    B = build_target(example, FeaturePartition(1, seed=5))
    assert np.array_equal(B, [[2.0], [2.0]])


def test_feature_partition_is_group_sum(rng):
    A = rng.uniform(-1, 1, (5, 12))
    spec = FeaturePartition(4, seed=11)
    labels = partition_assignment(12, 4, 11)
    expected = np.stack([A[:, labels == c].sum(axis=1) for c in range(4)], axis=1)
    assert np.allclose(build_target(A, spec), expected, rtol=1e-14, atol=1e-15)


def test_random_projection(rng):
    A = rng.uniform(-1, 1, (5, 7))
    spec = RandomProjection(3, seed=42)
    B1, B2 = build_target(A, spec), build_target(A, spec)
    assert B1.shape == (5, 3)
    assert np.array_equal(B1, B2)
    assert not np.array_equal(B1, build_target(A, RandomProjection(3, seed=43)))
    assert np.allclose(B1, A @ random_projection_matrix(7, 3, 42), rtol=1e-14)


def test_random_projection_scaling():
    Om = random_projection_matrix(400, 50, 0)
    # entries ~ N(0, 1/r): column norms concentrate near sqrt(n / r)
    assert np.mean(np.sum(Om**2, axis=0)) == pytest.approx(400 / 50, rel=0.05)


def test_external_target(example):
    y = np.array([[1.0], [2.0]])
    assert np.array_equal(build_target(example, ExternalTarget(y)), y)
    with pytest.raises(ValueError):
        build_target(example, ExternalTarget(np.ones((3, 1))))


@pytest.mark.parametrize(
    "spec",
    [RandomProjection(0), FeaturePartition(0), FeaturePartition(4), SvdTarget(3), SvdTarget(0)],
)
def test_spec_invariants_rejected(example, spec):
    with pytest.raises(ValueError):
        build_target(example, spec)


@pytest.mark.parametrize("seed", range(10))
def test_shapes(seed):
    rng = np.random.default_rng(seed)
    m, n = int(rng.integers(2, 9)), int(rng.integers(2, 9))
    A = rng.uniform(-1, 1, (m, n))
    k = min(m, n)
    cases = [
        (SelfTarget(), n),
        (RandomProjection(5, seed), 5),
        (FeaturePartition(n, seed), n),
        (SvdTarget(k), k),
        (ExternalTarget(rng.uniform(size=(m, 2))), 2),
    ]
    for spec, cols in cases:
        B = build_target(A, spec)
        assert B.shape == (m, cols)


@pytest.mark.parametrize("seed", range(10))
def test_svd_sign_invariance(seed):
    rng = np.random.default_rng(seed)
    A = rng.uniform(-1, 1, (7, 9))
    B = build_target(A, SvdTarget(3))
    flipped = B.copy()
    flipped[:, rng.integers(3)] *= -1
    assert greedy_select(A, B, 3).selected == greedy_select(A, flipped, 3).selected


def test_self_target_initial_criterion(rng):
    A = rng.uniform(-1, 1, (6, 9))
    s = init_state(A, build_target(A, SelfTarget()))
    expected = np.sum((A.T @ A) ** 2, axis=0) / np.sum(A**2, axis=0)
    assert np.allclose(s.f / s.g, expected, rtol=1e-12)


@pytest.mark.parametrize("seed", range(15))
def test_single_signal_is_orthogonal_least_squares(seed):
    rng = np.random.default_rng(seed)
    D = rng.standard_normal((10, 15))
    y = rng.standard_normal(10)
    B = build_target(D, ExternalTarget(y))
    rep = greedy_select(D, B, 4)
    assert rep.selected == naive_greedy(D, B, 4)
    S = []
    for p in rep.selected:
        errors = {i: criterion(D, S + [i], B) for i in range(15) if i not in S}
        assert errors[p] == pytest.approx(min(errors.values()), rel=1e-10)
        S.append(p)
