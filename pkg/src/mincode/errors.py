"""Exception types shared across the package."""


class MincodeError(Exception):
    """Base class for all package-specific errors."""


class NotPrime(MincodeError):
    pass


class Reducible(MincodeError):
    pass


class DegreeMismatch(MincodeError):
    pass


class DivisionByZero(MincodeError, ZeroDivisionError):
    pass


class LengthMismatch(MincodeError):
    pass


class ZeroVector(MincodeError):
    pass


class EmptyDefiningSet(MincodeError):
    pass


class DimensionMismatch(MincodeError):
    pass


class TooLarge(MincodeError):
    """Enumeration guard exceeded (message space larger than the cap)."""


class TooManySubspaces(MincodeError):
    """Subspace enumeration guard exceeded."""


class NotProjective(MincodeError):
    """Operation requires a projective set; project the multiset first."""


class BadRange(MincodeError):
    pass


class BadIndex(MincodeError):
    pass


class EmptyS(MincodeError):
    pass


class CoversWholeSpace(MincodeError):
    pass


class AmbientMismatch(MincodeError):
    pass


class UnsupportedFamily(MincodeError):
    pass
