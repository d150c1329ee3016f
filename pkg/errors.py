"""
Alpha-Unit Toolkit - Error Types

Every failure the library can raise on purpose derives from AlphaUnitError.
Each class carries the exit code the command-line surface reports for it:

- 1: usage errors (bad flags, invalid parameter values)
- 2: data errors (unreadable files, values outside a support, degenerate samples)
- 3: numerical errors (root not bracketed, iteration limit reached)
"""


class AlphaUnitError(Exception):
    """Base class for all toolkit errors."""

    exit_code: int = 1


# ============================================================================
# Usage Errors (exit code 1)
# ============================================================================

class UsageError(AlphaUnitError):
    """Invalid command-line usage or option combination."""

    exit_code = 1


# ============================================================================
# Data Errors (exit code 2)
# ============================================================================

class DataError(AlphaUnitError):
    """The data handed to an operation cannot be used."""

    exit_code = 2


class DomainError(DataError, ValueError):
    """An argument lies outside the domain of the function being evaluated."""


class DegenerateSampleError(DataError):
    """The sample carries no information about the parameter (e.g. every value is 1)."""


class BoundaryLikelihoodError(DataError):
    """A likelihood was requested for data containing the support boundary x = 1."""


class DataIngestionError(DataError):
    """A CSV file could not be read into a numeric column."""


class DegenerateRangeError(DataError):
    """Min-max standardization was requested for a constant series."""


# ============================================================================
# Numerical Errors (exit code 3)
# ============================================================================

class NumericalError(AlphaUnitError):
    """A numerical procedure failed to produce a trustworthy answer."""

    exit_code = 3


class BracketError(NumericalError):
    """The root-finding bracket does not contain a sign change."""


class ConvergenceError(NumericalError):
    """An iterative procedure reached its iteration limit."""
