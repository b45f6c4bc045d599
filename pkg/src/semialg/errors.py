"""Exception types shared across the package.

The CLI maps these onto distinct exit codes, so keep the hierarchy flat
and stable: parse problems, semiring-domain problems, shape problems.
"""


class SemialgError(Exception):
    """Base class for all package errors."""


class SemiringError(SemialgError):
    """Domain error: invalid operand, wrong instance for a task, divergence."""


class CarrierError(SemiringError):
    """A value is not a member of the semiring's carrier set."""


class ClosureUndefinedError(SemiringError):
    """The Kleene star is not defined at this element in this instance.

    Signals that the caller must switch to a complete instance (or fix the
    input).  ``index`` carries the pivot position when raised from a matrix
    algorithm.
    """

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index


class StabilizationError(SemiringError):
    """An iterative method did not reach a fixed point within its cap."""


class DimensionError(SemialgError):
    """Shapes or grids of the operands do not agree."""


class ParseError(SemialgError):
    """Malformed input file or token."""
