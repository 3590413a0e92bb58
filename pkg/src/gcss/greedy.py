"""Fast greedy generalized column subset selection.

Selects columns of a source matrix ``A`` (m x n) one at a time so that their
span captures as much of a target matrix ``B`` (m x r) as possible. The score
of column ``i`` is ``f[i] / g[i]``, where ``g[i]`` is the squared norm of the
residual of ``A[:, i]`` and ``f[i]`` the squared norm of ``B``'s residual
correlations with it. Both vectors are kept up to date with rank-one
corrections built from the ``omega``/``upsilon`` vectors of earlier
iterations, so residual matrices are never formed. One iteration costs a
single pass over ``A`` plus O(t (n + r)) bookkeeping.
"""
from dataclasses import asdict, dataclass, field
from typing import List, Optional

import numpy as np

from . import oracle
from .exceptions import DimensionError, NumericalBreakdown
from .matrix import as_dense, frobenius_sq

__all__ = [
    "ToleranceConfig",
    "SelectionState",
    "IterationRecord",
    "GreedyReport",
    "init_state",
    "select_next",
    "update_state",
    "greedy_select",
]

SPAN_EXHAUSTED = "span exhausted"
GAIN_BELOW_THRESHOLD = "gain below eps_stop"


@dataclass(frozen=True)
class ToleranceConfig:
    """Numerical thresholds for the greedy loop.

    eps_admit : a column is a candidate only while ``g[i]`` exceeds
        ``eps_admit * max(initial g)``.
    eps_stop : stop once the best gain is at most ``eps_stop * ||B||_F^2``.
        Zero disables early stopping.
    eps_tie : relative precision assumed for the tracked scores. Columns
        whose score is within that precision of the best are tied, and the
        smallest index wins.
    refresh_every : if set, recompute ``f`` and ``g`` from explicit residuals
        every this many iterations.
    """

    eps_admit: float = 1e-10
    eps_stop: float = 0.0
    eps_tie: float = 1e-12
    refresh_every: Optional[int] = None

    def __post_init__(self):
        for name in ("eps_admit", "eps_stop", "eps_tie"):
            value = getattr(self, name)
            if not value >= 0:
                raise ValueError(f"{name} must be >= 0, got {value}")
        if self.refresh_every is not None and self.refresh_every < 1:
            raise ValueError(f"refresh_every must be >= 1, got {self.refresh_every}")


@dataclass
class SelectionState:
    """Mutable state of the greedy loop.

    ``a_t_b`` caches ``A.T @ B`` unless the target is wide enough that
    working through a square-root factor of ``B @ B.T`` is cheaper (see
    :func:`init_state`). In that case products with ``B`` are applied on the
    fly, which avoids an n x r cache (n x n for the self target).
    """

    B: np.ndarray
    f: np.ndarray
    g: np.ndarray
    objective: float
    initial_objective: float
    g_max0: float
    f_max0: float
    a_t_b: Optional[np.ndarray]
    selected: List[int] = field(default_factory=list)
    iteration: int = 0
    refreshes: List[int] = field(default_factory=list)
    _omega: np.ndarray = None
    _upsilon: np.ndarray = None

    def __post_init__(self):
        n, r = self.f.shape[0], self.B.shape[1]
        if self._omega is None:
            self._omega = np.empty((4, n))
        if self._upsilon is None:
            self._upsilon = np.empty((4, r))

    @property
    def omega_hist(self):
        return self._omega[: self.iteration]

    @property
    def upsilon_hist(self):
        return self._upsilon[: self.iteration]

    def _push(self, omega, upsilon):
        t = self.iteration
        if t == self._omega.shape[0]:
            self._omega = np.vstack([self._omega, np.empty_like(self._omega)])
            self._upsilon = np.vstack([self._upsilon, np.empty_like(self._upsilon)])
        self._omega[t] = omega
        self._upsilon[t] = upsilon
        self.iteration = t + 1


@dataclass(frozen=True)
class IterationRecord:
    index: int
    gain: float
    objective_after: float


@dataclass
class GreedyReport:
    selected: List[int]
    iterations: List[IterationRecord]
    initial_objective: float
    final_objective: float
    stopped_early: bool
    stop_reason: Optional[str]
    num_columns: int
    tol: ToleranceConfig
    refreshes: List[int] = field(default_factory=list)

    def to_dict(self):
        return asdict(self)


def init_state(A, B, capacity=4):
    """Initial scores ``f[i] = ||B.T A[:, i]||^2`` and ``g[i] = ||A[:, i]||^2``."""
    A = as_dense(A, "A")
    B = as_dense(B, "B")
    m, n = A.shape
    r = B.shape[1]
    if B.shape[0] != m:
        raise DimensionError(f"row mismatch: A has {m}, B has {B.shape[0]}")
    g = np.einsum("ij,ij->j", A, A)
    if n * r <= m * (n + r):
        a_t_b = A.T @ B
        f = np.einsum("ij,ij->i", a_t_b, a_t_b)
    else:
        # B B^T = R^T R with R the m x m factor of a QR of B^T, so
        # ||B^T a||^2 = ||R a||^2 at O(m^2 (n + r)) instead of O(mnr).
        a_t_b = None
        C = np.linalg.qr(B.T, mode="r") @ A
        f = np.einsum("ij,ij->j", C, C)
    objective = frobenius_sq(B)
    return SelectionState(
        B=B,
        f=f,
        g=g,
        objective=objective,
        initial_objective=objective,
        g_max0=float(g.max()),
        f_max0=float(f.max()),
        a_t_b=a_t_b,
        _omega=np.empty((max(capacity, 1), n)),
        _upsilon=np.empty((max(capacity, 1), r)),
    )


def _choose(state, tol):
    admissible = state.g > tol.eps_admit * state.g_max0
    admissible[state.selected] = False
    if not admissible.any():
        return None, SPAN_EXHAUSTED
    f, g = state.f[admissible], state.g[admissible]
    ratio = np.full(state.f.shape, -np.inf)
    ratio[admissible] = f / g
    best = ratio.max()
    if tol.eps_stop > 0 and best <= tol.eps_stop * state.initial_objective:
        return None, GAIN_BELOW_THRESHOLD
    # Tracked f and g carry absolute error of order eps_tie times their
    # initial scale, so a score is only known to within err ~ 1/g[i]. Every
    # column whose score reaches the best certain lower bound counts as tied.
    err = tol.eps_tie * (state.f_max0 + ratio[admissible] * state.g_max0) / g
    floor = np.max(ratio[admissible] - err) - tol.eps_tie * state.initial_objective
    # first index in the tie set == strict '>' scan in ascending order
    p = int(np.flatnonzero(ratio >= floor)[0])
    return p, None


def select_next(state, tol=None):
    """Index of the next column to select, or ``None`` when nothing is left.

    ``None`` means no admissible column remains, or the best gain fell to
    ``eps_stop`` or below.
    """
    return _choose(state, tol or ToleranceConfig())[0]


def update_state(state, A, p, tol=None):
    """Add column ``p`` to the selection and update ``f``, ``g`` and the objective.

    Returns the gain ``f[p] / g[p]`` (taken before the update), which is the
    decrease of the objective. ``state`` is modified in place.
    """
    A = as_dense(A, "A")
    t = state.iteration
    W, U = state.omega_hist, state.upsilon_hist
    w_p = W[:, p]

    delta = A.T @ A[:, p] - W.T @ w_p
    if state.a_t_b is not None:
        gamma = state.a_t_b[p] - U.T @ w_p
    else:
        gamma = state.B.T @ A[:, p] - U.T @ w_p
    pivot = delta[p]
    if not pivot > 0:
        raise NumericalBreakdown(
            f"non-positive pivot {pivot!r} for column {p} at iteration {t + 1}; "
            "consider setting refresh_every",
            value=float(pivot),
            iteration=t + 1,
        )
    root = np.sqrt(pivot)
    omega = delta / root
    upsilon = gamma / root

    # H^T upsilon with H = A^T B - sum_r omega_r upsilon_r^T
    if state.a_t_b is not None:
        h_t_u = state.a_t_b @ upsilon
    else:
        h_t_u = A.T @ (state.B @ upsilon)
    h_t_u -= W.T @ (U @ upsilon)

    gain = float(state.f[p] / state.g[p])
    omega_sq = omega * omega
    state.f = state.f - 2.0 * omega * h_t_u + (upsilon @ upsilon) * omega_sq
    state.g = state.g - omega_sq
    state.objective -= gain
    state.selected.append(int(p))
    state._push(omega, upsilon)

    if tol is not None and tol.refresh_every and state.iteration % tol.refresh_every == 0:
        state.f, state.g = oracle.residual_scores(A, state.selected, state.B)
        state.refreshes.append(state.iteration)
    return gain


def greedy_select(A, B, l, tol=None):
    """Greedily select up to ``l`` columns of ``A`` approximating the span of ``B``.

    Parameters
    ----------
    A : array_like, shape (m, n)
        Source matrix whose columns are candidates.
    B : array_like, shape (m, r)
        Target matrix. Pass ``A`` itself for plain column subset selection or
        a single signal vector for orthogonal least squares.
    l : int
        Number of columns, ``1 <= l <= n``.
    tol : ToleranceConfig, optional

    Returns
    -------
    GreedyReport
        Selection order, per-iteration gains and objectives. Fewer than ``l``
        columns are returned when the admissible set runs out or the gain
        drops to ``eps_stop``; ``stopped_early`` records why.
    """
    tol = tol or ToleranceConfig()
    A = as_dense(A, "A")
    n = A.shape[1]
    if not 1 <= l <= n:
        raise DimensionError(f"l={l} must lie in [1, {n}]")
    state = init_state(A, B, capacity=l)
    records = []
    reason = None
    for _ in range(l):
        p, reason = _choose(state, tol)
        if p is None:
            break
        gain = update_state(state, A, p, tol)
        records.append(IterationRecord(p, gain, state.objective))
    return GreedyReport(
        selected=list(state.selected),
        iterations=records,
        initial_objective=state.initial_objective,
        final_objective=state.objective,
        stopped_early=reason is not None,
        stop_reason=reason,
        num_columns=l,
        tol=tol,
        refreshes=list(state.refreshes),
    )
