"""Exception hierarchy shared by every module in the package."""

from __future__ import annotations


class ProjForceError(Exception):
    """Base class for all errors raised by projforce."""


class NotPrimePower(ProjForceError, ValueError):
    pass


class UnsupportedOrder(ProjForceError, ValueError):
    pass


class DivisionByZero(ProjForceError, ZeroDivisionError):
    pass


class LengthMismatch(ProjForceError, ValueError):
    pass


class Overflow(ProjForceError, OverflowError):
    """The number of projective points exceeds the configured cap."""


class RankDeficient(ProjForceError, ValueError):
    pass


class SizeMismatch(ProjForceError, ValueError):
    """A multiset does not have (q^k - 1)/(q - 1) elements."""


class NonIntegral(ProjForceError, ValueError):
    pass


class TooLarge(ProjForceError, ValueError):
    """Input exceeds the hard cap of a brute-force oracle."""


class BudgetExhausted(ProjForceError):
    """The search visited more nodes than its budget allows.

    ``stats`` holds the counters accumulated up to the point of failure.
    """

    def __init__(self, message: str, stats=None):
        super().__init__(message)
        self.stats = stats
