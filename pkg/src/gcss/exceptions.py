"""Exception and warning types raised across the package."""


class DimensionError(ValueError):
    """Operand shapes are incompatible, or an index is out of range."""


class NonFiniteError(ValueError):
    """A matrix contains NaN or Inf entries."""


class SvdConvergenceError(ArithmeticError):
    """The SVD routine failed to converge."""


class NumericalBreakdown(ArithmeticError):
    """The pivot of a rank-one update became non-positive.

    Raised by the greedy engine when accumulated roundoff makes the selected
    column look already spanned. Setting ``refresh_every`` on the tolerance
    configuration usually avoids it.
    """

    def __init__(self, message, value=None, iteration=None):
        super().__init__(message)
        self.value = value
        self.iteration = iteration


class SearchCapExceeded(ValueError):
    """Exhaustive search would enumerate more subsets than allowed."""


class RankDeficiencyWarning(UserWarning):
    """Selected columns are linearly dependent; a minimum-norm solution was used."""


class MatrixFormatError(ValueError):
    """A matrix file is malformed or uses an unsupported variant."""
