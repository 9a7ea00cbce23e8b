"""Exception types shared across the package."""


class SnumError(Exception):
    """Base class for all package errors."""


class NotPolyhedral(SnumError):
    """Raised when an operation needs a finite extreme-point set but p = 2."""


class NotHilbert(SnumError):
    """Raised when an operation requires both spaces to be l2."""


class VertexCapExceeded(SnumError):
    """Sign-vertex enumeration over an l-infinity ball would exceed the cap."""


class IndexOutOfRange(SnumError):
    """s-number index outside 1..dim+1."""


class DegenerateFrame(SnumError):
    """Frame columns are linearly dependent beyond the rank tolerance."""


class ConvergenceFailure(SnumError):
    """Iterative routine failed to converge within its sweep budget."""


class BudgetExceeded(SnumError):
    """Oracle work budget exhausted (soft: best-so-far is attached)."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class NetTooCoarse(SnumError):
    """Requested tolerance unachievable at the configured epsilon-net size."""


class WeightUnbounded(SnumError):
    """A lazy weight generator exceeded its declared bound."""


class NormViolation(SnumError):
    """Input vector violates a required norm constraint."""


class ParseError(SnumError):
    """Experiment spec file is not valid JSON."""

    def __init__(self, message, line=None, column=None):
        super().__init__(message)
        self.line = line
        self.column = column


class ValidationError(SnumError):
    """Experiment spec parsed but a named field is invalid."""

    def __init__(self, message, field=None):
        super().__init__(message)
        self.field = field


class SolverError(SnumError):
    """A solver failed in a way that invalidates its result."""
