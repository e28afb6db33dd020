"""Exception hierarchy.

Every domain failure is a subclass of :class:`DomainError`; the CLI maps
those to exit code 2 and prints the class name.  Malformed input files
raise :class:`ParseError` (exit code 1).
"""


class TightliftError(Exception):
    """Base class for all package errors."""


class ParseError(TightliftError):
    pass


class DomainError(TightliftError):
    pass


# linear algebra
class SingularMatrix(DomainError):
    pass


# grid diagrams
class InvalidGrid(DomainError):
    pass


class UnknownComponent(DomainError):
    pass


class SameComponent(DomainError):
    pass


# surgery presentations and Kirby moves
class InvalidPresentation(DomainError):
    pass


class NotCharacteristic(DomainError):
    pass


class NotIsolated(DomainError):
    pass


class NotUnitFramed(DomainError):
    pass


class MoveError(DomainError):
    """A move script aborted; ``position`` is the 0-based move index."""

    def __init__(self, position, cause):
        self.position = position
        self.cause = cause
        super().__init__(
            f"move {position + 1} failed: {type(cause).__name__}: {cause}")


# d3 and Spin^C
class MissingRotation(DomainError):
    pass


class ParityViolation(DomainError):
    pass


# coverings
class NotDivisible(DomainError):
    pass


class NotCharacteristicUpstairs(DomainError):
    pass


class InvalidScene(DomainError):
    pass


# Seifert data
class NotCoprime(DomainError):
    pass


class CableCase(DomainError):
    pass


class BadLocalDegree(DomainError):
    pass


class NegativeGenus(DomainError):
    pass


class OutOfRange(DomainError):
    pass


class ZeroEuler(DomainError):
    pass


class TooManyFibers(DomainError):
    pass


class NotQHS(DomainError):
    pass


# expectation checks (CLI --check)
class ExpectationMismatch(TightliftError):
    pass


# localization
class InvalidRing(DomainError):
    pass


class InvalidRepresentation(DomainError):
    pass
