"""Exception types shared across the package."""


class InfeasibleSizeError(ValueError):
    """Raised when an instance exceeds an exhaustive or dense size guard."""


class InternalCheckError(RuntimeError):
    """An internal consistency check failed (a bug, not bad input)."""


class ConvergenceError(RuntimeError):
    """An iterative solver hit its iteration cap.

    ``best`` carries the best value found so far.
    """

    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best
