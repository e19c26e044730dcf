"""Exception types.

Every domain failure derives from :class:`LinFieldError`; the CLI maps those
to exit code 1 and reports the class name.  Malformed documents raise
:class:`MalformedInput` instead (exit code 2).
"""


class LinFieldError(Exception):
    """Base class for precondition and domain failures."""


class MalformedInput(ValueError):
    """A JSON document or command-line operand could not be parsed."""


class NotPrime(LinFieldError, ValueError):
    pass


class ReduciblePolynomial(LinFieldError, ValueError):
    def __init__(self, level: str, message: str = "") -> None:
        self.level = level
        super().__init__(message or f"defining polynomial of level {level!r} is reducible")


class DegreeZero(LinFieldError, ValueError):
    pass


class DivisionByZero(LinFieldError, ZeroDivisionError):
    pass


class TowerMismatch(LinFieldError, ValueError):
    pass


class FieldTooLarge(LinFieldError, ValueError):
    pass


class NotADivisor(LinFieldError, ValueError):
    pass


class ScalarNotInBaseField(LinFieldError, ValueError):
    pass


class NotDickson(LinFieldError, ValueError):
    pass


class NotAPermutation(LinFieldError, ValueError):
    pass


class NotABasis(LinFieldError, ValueError):
    pass


class DivisionByZeroPoly(LinFieldError, ZeroDivisionError):
    pass


class BothZero(LinFieldError, ValueError):
    pass


class WrongRank(LinFieldError, ValueError):
    pass


class NotSubfieldPoly(LinFieldError, ValueError):
    pass


class NotNormalBasis(LinFieldError, ValueError):
    pass
