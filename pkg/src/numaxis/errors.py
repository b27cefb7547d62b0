"""Exception hierarchy shared by every numaxis module.

The CLI maps the three top-level families onto exit codes: argument errors
exit with 2, domain errors with 3, output errors with 4.
"""


class NumAxisError(Exception):
    """Base class for all errors raised by numaxis."""


class ArgumentError(NumAxisError, ValueError):
    """A precondition on the arguments of an operation was violated."""


class SeriesRangeError(ArgumentError):
    """An exact partial sum would exceed the supported integer/rational range."""


class DomainError(NumAxisError, ValueError):
    """The arguments are well formed but lie outside the mathematical domain."""


class PoleError(DomainError):
    """The zeta function was evaluated at its pole s = 1."""


class HorizonError(DomainError):
    """A point lies at or behind the horizon x = -x_c of the metric."""


class RegionError(DomainError):
    """A point lies outside the open interval of an embedding region."""


class BoundaryError(RegionError):
    """A point lies exactly on a region boundary (z = -1 or z = 0)."""


class SignatureError(DomainError):
    """The embedding equation has no real solution under the plane signature."""


class ConvergenceError(DomainError):
    """Two independent evaluations of the same quantity disagree."""


class OutputError(NumAxisError, OSError):
    """An output artifact could not be written."""
