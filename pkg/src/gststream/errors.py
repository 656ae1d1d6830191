"""Exception types shared across the package.

``InvalidArgumentError`` covers contract violations on inputs (the CLI maps
it to exit code 1); everything deriving from ``NumericalError`` signals a
failure during computation (exit code 2).
"""


class GstStreamError(Exception):
    """Base class for all package-specific errors."""


class InvalidArgumentError(GstStreamError, ValueError):
    """An input violates a documented precondition."""


class NumericalError(GstStreamError):
    """A computation failed or produced unusable values."""


class IndefiniteMatrixError(NumericalError):
    """A matrix required to be PSD has a significantly negative eigenvalue."""


class GenerationFailureError(NumericalError):
    """Random model generation exhausted its rejection budget."""


class SimulationError(NumericalError):
    """Sampling from an invalid probability vector."""


class StreamMismatchError(NumericalError):
    """Observation stream does not follow the design schedule."""


class OptimizationFailureError(NumericalError):
    """Optimizer hit non-finite values; best-so-far result is attached."""

    def __init__(self, message, result=None):
        super().__init__(message)
        self.result = result
