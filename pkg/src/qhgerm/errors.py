"""Exception types shared across the package.

Division by zero in the exact field raises the stdlib ZeroDivisionError;
everything else gets a dedicated class here so callers (and the CLI exit-code
mapping) can tell input problems, scope problems, and internal bugs apart.
"""

from __future__ import annotations


class QhgermError(Exception):
    """Base class for all package-specific errors."""


class ZeroPolynomialError(QhgermError):
    """An operation that needs a nonzero polynomial received the zero polynomial."""


class ParseError(QhgermError):
    """Polynomial text could not be parsed. Carries the 0-based offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class EmptyInputError(ParseError):
    """Input was empty or whitespace only."""

    def __init__(self):
        super().__init__("empty input", 0)


class NegativeExponentError(ParseError):
    """A '-' appeared where an unsigned exponent was required."""

    def __init__(self, position: int):
        super().__init__("negative exponents are not allowed", position)


class NotQuasihomogeneousError(QhgermError):
    """No admissible weight pair fits the support of the polynomial."""


class WeightMismatchError(QhgermError):
    """Support points disagree with the asserted weights."""

    def __init__(self, message: str, offending: list):
        super().__init__(message)
        self.offending = offending


class InternalInconsistencyError(QhgermError):
    """Re-expansion of a canonical factorization failed to reproduce the input."""


class FormulaMismatchError(QhgermError):
    """The closed-form order at the origin disagreed with the brute-force value."""


class BranchOutOfRangeError(QhgermError):
    """A requested root branch index is outside [0, index)."""


class NotEquivalentVerdictError(QhgermError):
    """Witness construction was asked for a verdict that is not Equivalent."""


class NonConvergenceError(QhgermError):
    """Root iteration failed to converge. Carries the best iterate found."""

    def __init__(self, message: str, best=None, residuals=None):
        super().__init__(message)
        self.best = best
        self.residuals = residuals


class AmbiguousClusteringError(QhgermError):
    """Root spacing sits in the unsafe band around the clustering tolerance."""


class DegenerateConfigurationError(QhgermError):
    """A cross-ratio was requested for a tuple with repeated points."""
