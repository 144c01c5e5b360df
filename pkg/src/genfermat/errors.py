"""Exception taxonomy shared across the package."""


class GenFermatError(Exception):
    """Base class for all domain errors raised by this package."""


class NotPrime(GenFermatError):
    """Characteristic is not a prime number."""


class BadDegree(GenFermatError):
    """Extension degree must be a positive integer."""


class NotCoprime(GenFermatError):
    """Integers required to be coprime are not."""


class NoSuchRoot(GenFermatError):
    """The field contains no primitive root of the requested order."""


class NoKthRoots(GenFermatError):
    """The field does not contain the k-th roots of unity."""


class DivisionByZero(GenFermatError, ZeroDivisionError):
    """Multiplicative inverse of zero requested."""


class FieldMismatch(GenFermatError):
    """Operands belong to different fields and were not embedded explicitly."""


class NotGeneralPosition(GenFermatError):
    """Hyperplane tuple fails the general-position minor criterion."""


class DuplicateHyperplane(GenFermatError):
    """An arrangement was given the same hyperplane twice."""


class SingularMap(GenFermatError):
    """A projective transformation was given a singular matrix."""


class NotOnVariety(GenFermatError):
    """The point does not satisfy the defining forms."""


class BadIndex(GenFermatError):
    """Index out of range for the requested construction."""


class OutOfRange(GenFermatError):
    """Integer argument outside its documented range."""


class BudgetExceeded(GenFermatError):
    """A configured enumeration or search budget would be exceeded."""


class LiftObstruction(GenFermatError):
    """A required k-th root was not found within the extension search bound."""
