"""Exception types raised by the simulator."""


class MagnomechError(Exception):
    """Base class for all package errors."""


class InvalidParameterError(MagnomechError, ValueError):
    """A physical parameter violates its contract (sign, range, ...)."""


class StabilityError(MagnomechError):
    """The drift matrix is not strictly stable where a steady state is needed."""


class ConvergenceError(MagnomechError):
    """An iterative procedure did not converge within its budget."""


class AccuracyError(MagnomechError):
    """A discretisation is too coarse for the requested result."""


class IntegrationError(MagnomechError):
    """A frequency-domain integral failed its convergence checks."""


class UsageError(MagnomechError):
    """Bad configuration or command-line input."""
