"""Exception types shared across the package."""

from .exact import NotAnInteger


class OrthorepError(Exception):
    pass


class IndexOutOfRange(OrthorepError, IndexError):
    pass


class ShapeMismatch(OrthorepError, ValueError):
    pass


class ZeroPolynomial(OrthorepError, ValueError):
    pass


class InvalidIndex(OrthorepError, ValueError):
    pass


class RankMismatch(OrthorepError, ValueError):
    pass


class NonDominant(OrthorepError, ValueError):
    pass


class NotAWeightVector(OrthorepError, ValueError):
    pass


class SizeGuard(OrthorepError, RuntimeError):
    pass


class OutOfRange(OrthorepError, ValueError):
    pass


class ConstraintViolation(OrthorepError, ValueError):
    pass


class InterlacingViolation(OrthorepError, ValueError):
    pass


__all__ = [
    "OrthorepError",
    "NotAnInteger",
    "IndexOutOfRange",
    "ShapeMismatch",
    "ZeroPolynomial",
    "InvalidIndex",
    "RankMismatch",
    "NonDominant",
    "NotAWeightVector",
    "SizeGuard",
    "OutOfRange",
    "ConstraintViolation",
    "InterlacingViolation",
]
