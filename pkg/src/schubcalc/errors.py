"""Exception hierarchy shared by the kernel and the command line."""


class SchubcalcError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(SchubcalcError, ValueError):
    """Malformed textual or JSON input."""


class RankBoundError(SchubcalcError):
    """A permutation rank exceeds the configured limit."""


class BudgetExceededError(SchubcalcError):
    """An exhaustive scan would evaluate more points than allowed."""


class CompositePrimeError(SchubcalcError, ValueError):
    """A certificate modulus is not prime."""


class DimensionMismatchError(SchubcalcError, ValueError):
    """A point or system has the wrong number of coordinates."""
