"""Exception hierarchy shared by all modules."""
from __future__ import annotations


class EquisingError(Exception):
    """Base class for every error raised by this package."""


class InvalidInput(EquisingError, ValueError):
    """The polynomial or request violates a documented precondition."""


class InternalInvariant(EquisingError, RuntimeError):
    """A property guaranteed by the theory failed to hold; never a verdict."""


# ring
class NotMonic(InvalidInput):
    pass


class NotSquareFree(InvalidInput):
    pass


class RingMismatch(EquisingError, TypeError):
    pass


class ZeroElement(EquisingError, ZeroDivisionError):
    pass


class ZeroDivisor(EquisingError, ZeroDivisionError):
    """Raised when inverting a nonzero non-unit.

    ``element`` is the offending value and ``witness`` a nonzero ``b`` with
    ``element * b == 0``.
    """

    def __init__(self, element, witness=None):
        super().__init__(f"{element} is a zero divisor")
        self.element = element
        self.witness = witness


# series / newton / roots
class ValuationBelowPrecision(EquisingError, ArithmeticError):
    pass


class ZeroPolynomial(InvalidInput):
    pass


class NotDivisor(InvalidInput):
    pass


class DegreeMismatch(InvalidInput):
    pass


# pipeline
class IncompleteData(EquisingError, ValueError):
    pass


class NoValidShift(InvalidInput):
    pass


# oracle
class CommonFactor(EquisingError, ValueError):
    pass


class NotPrimitive(InvalidInput):
    pass


class PrecisionTooLow(EquisingError, ArithmeticError):
    pass


class InvalidPrefix(EquisingError, ValueError):
    pass


# cli
class PolySyntaxError(EquisingError, ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnknownVariable(PolySyntaxError):
    pass
