"""Greedy generalized column subset selection."""
from .exceptions import (
    DimensionError,
    MatrixFormatError,
    NonFiniteError,
    NumericalBreakdown,
    RankDeficiencyWarning,
    SearchCapExceeded,
    SvdConvergenceError,
)
from .greedy import GreedyReport, IterationRecord, SelectionState, ToleranceConfig, greedy_select, init_state, select_next, update_state
from .io import load_matrix, write_matrix_csv
from .matrix import SvdPair, as_dense, cross_gram_column, frobenius_sq, gram_column, mat_transpose_mat, top_k_svd
from .oracle import (
    check_projection_decomposition,
    criterion,
    exhaustive_best,
    naive_greedy,
    projection_apply,
    residual_scores,
    residuals,
    solve_coefficients,
)
from .targets import ExternalTarget, FeaturePartition, RandomProjection, SelfTarget, SvdTarget, build_target

__version__ = "0.1.0"
