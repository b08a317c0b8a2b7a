"""Exception types.

Errors that mean "a theorem's hypothesis is not satisfied" derive from
:class:`HypothesisNotMet`; the CLI maps those to exit code 2.
"""


class K3NefError(Exception):
    """Base class for all package errors."""


class HypothesisNotMet(K3NefError):
    """A result was requested outside the range where it is known to hold.

    ``hypothesis`` is a short machine-readable statement of the failed
    condition, e.g. ``"n >= 9k/8"``.
    """

    def __init__(self, message: str, hypothesis: str):
        super().__init__(message)
        self.hypothesis = hypothesis


class ThresholdNotMet(HypothesisNotMet):
    pass


class BelowThreshold(HypothesisNotMet):
    """The candidate wall fails the radius criterion and is not certified."""

    def __init__(self, message: str, hypothesis: str, check=None):
        super().__init__(message, hypothesis)
        self.check = check


class PreconditionError(HypothesisNotMet, ValueError):
    pass


class InvalidSurface(HypothesisNotMet, ValueError):
    pass


class DegeneratePairing(K3NefError, ValueError):
    pass


class ConeError(K3NefError, ValueError):
    pass


class EqualSlopes(K3NefError, ValueError):
    pass


class VerticalWall(K3NefError, ZeroDivisionError):
    pass


class HorizontalDegenerate(K3NefError, ZeroDivisionError):
    pass
