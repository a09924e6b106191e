"""Exception types shared across the package."""


class TPError(Exception):
    """Base class for errors raised by tptoeplitz."""


class NotTotallyPositive(TPError, ValueError):
    """A minor that must be nonzero vanished: the input lies outside the
    totally positive (open) stratum."""


class InsufficientCoefficients(TPError, ValueError):
    """A determinant asked for a coefficient beyond the available truncation."""


class StabilizationError(TPError, ValueError):
    """A truncated infinite object did not stabilize inside its window."""


class ConvergenceError(TPError, RuntimeError):
    """An iterative solver failed to reach its tolerance."""

    def __init__(self, message, residual=None, iterations=None):
        super().__init__(message)
        self.residual = residual
        self.iterations = iterations


class ConfigError(TPError, ValueError):
    """Malformed JSON configuration; carries the offending path and field."""

    def __init__(self, message, path=None, field=None):
        where = ""
        if path is not None:
            where += f"{path}: "
        if field is not None:
            where += f"field {field!r}: "
        super().__init__(where + message)
        self.path = path
        self.field = field
