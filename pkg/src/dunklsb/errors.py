"""Exception hierarchy shared by all modules."""


class DunklError(Exception):
    """Base class for every error raised by this package."""


class InvalidRootError(DunklError, ValueError):
    pass


class NotARootSystemError(DunklError, ValueError):
    """Raised when a root list fails one of the root-system axioms.

    ``witness`` holds the offending pair ``(alpha, image)`` when the failure
    is a closure violation.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class RunawayClosureError(DunklError, RuntimeError):
    pass


class UnsupportedMultiplicityError(DunklError, ValueError):
    pass


class InvalidParameterError(DunklError, ValueError):
    pass


class PrecisionFailure(DunklError, ArithmeticError):
    """A truncated series or quadrature missed its error target.

    ``estimate`` carries the best value obtained and ``error`` the achieved
    error bound, so callers can still inspect the partial result.
    """

    def __init__(self, message, estimate=None, error=None):
        super().__init__(message)
        self.estimate = estimate
        self.error = error


class InternalConsistencyError(DunklError, AssertionError):
    pass


class DegeneracyError(DunklError, ArithmeticError):
    pass


class RangeError(DunklError, IndexError):
    pass


class TruncationError(DunklError, ValueError):
    """A truncation degree is too small for the requested operation."""

    def __init__(self, message, required=None):
        super().__init__(message)
        self.required = required
