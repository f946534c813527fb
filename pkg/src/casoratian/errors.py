"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class CasoratianError(Exception):
    """Base class for all errors raised by this package."""


class InvalidParams(CasoratianError, ValueError):
    """A family or builder was called outside its parameter domain."""


class EmptyComponent(CasoratianError, ValueError):
    """An operation needed ``max`` of an empty set component."""


class NonzeroRemainder(CasoratianError, ArithmeticError):
    """An exact polynomial division left a nonzero remainder."""

    def __init__(self, message: str, remainder=None):
        super().__init__(message)
        self.remainder = remainder


class DivisionByZeroPoly(CasoratianError, ZeroDivisionError):
    pass


class NotSquare(CasoratianError, ValueError):
    pass


class InternalInconsistency(CasoratianError, RuntimeError):
    """Two routes to the same quantity disagreed."""


class ZeroDenominator(CasoratianError, ZeroDivisionError):
    pass


class TailBoundUnavailable(CasoratianError, ValueError):
    """The truncation point is too small for the geometric tail bound."""
