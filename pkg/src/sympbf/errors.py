"""Exception types raised by sympbf."""


class DimensionError(ValueError):
    """Input length does not match the function's variable count."""


class NotSymmetricError(ValueError):
    """A symmetric operation was given a non-symmetric function.

    ``witness`` holds two subsets (as tuples of 1-based variable indices) of
    equal size whose coefficients differ.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class EnumerationLimitError(ValueError):
    """An exhaustive enumeration over {0,1}^n was requested above the limit."""


class RootFindingError(RuntimeError):
    """Simultaneous iteration did not converge.

    Carries the best iterates and their residuals so callers can inspect them.
    """

    def __init__(self, message, iterates=(), residuals=()):
        super().__init__(message)
        self.iterates = tuple(iterates)
        self.residuals = tuple(residuals)
