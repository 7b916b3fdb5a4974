"""Exception hierarchy.

Every error is a ``ValueError`` subclass so callers that only care about
bad input can catch that.
"""


class FinesepError(ValueError):
    pass


class NotHermitian(FinesepError):
    pass


class NotPSD(FinesepError):
    pass


class DimensionMismatch(FinesepError):
    pass


class NotNormalized(FinesepError):
    pass


class NotPermutation(FinesepError):
    pass


class RangeError(FinesepError):
    pass


class NotPrime(FinesepError):
    pass


class NotOrthonormal(FinesepError):
    pass


class InvalidState(FinesepError):
    pass


class InvalidPovm(FinesepError):
    pass


class InvalidMub(FinesepError):
    pass


class InvalidMum(FinesepError):
    pass


class NotAPartition(FinesepError):
    pass


class IntersectingPairs(FinesepError):
    pass


class ShapeMismatch(FinesepError):
    pass


class NoSignChange(FinesepError):
    pass
