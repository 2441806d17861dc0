"""Exception types shared across the package.

The CLI maps DomainError to exit code 2 and NumericError to exit code 3.
"""


class QedError(Exception):
    """Base class for all package errors."""


class DomainError(QedError):
    """Input outside the physical or mathematical domain of an operation."""


class PoleError(DomainError):
    """Evaluation requested exactly on a propagator pole in exact-limit mode."""


class NumericError(QedError):
    """A quadrature or root search failed to converge."""
