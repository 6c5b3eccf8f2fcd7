"""Exception hierarchy shared by every module of the package."""


class UDWError(Exception):
    """Base class for all errors raised by :mod:`udwdelta`."""


class DomainError(UDWError, ValueError):
    """An argument lies outside the mathematical domain of a function."""


class ValidationError(UDWError, ValueError):
    """A scenario or sweep specification violates one of its invariants."""


class OrderingError(ValidationError):
    """Detector A must switch no later than detector B."""


class RangeError(ValidationError):
    """A parameter is outside its admissible range."""


class ConsistencyError(UDWError):
    """Two inputs that must describe the same configuration disagree."""


class PositivityError(UDWError):
    """A density matrix element or eigenvalue is negative beyond tolerance."""


class AccuracyError(UDWError):
    """An adaptive quadrature did not reach the requested tolerance."""

    def __init__(self, message, achieved=None):
        super().__init__(message)
        self.achieved = achieved


class VerificationError(UDWError):
    """A closed form disagreed with its independent check."""
