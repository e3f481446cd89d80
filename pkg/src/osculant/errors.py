"""Exception and warning types raised by the engine."""


class OsculantError(Exception):
    """Base class for engine errors."""


class DenominatorVanishes(OsculantError, ZeroDivisionError):
    """A coordinate denominator is zero at the requested point."""

    def __init__(self, point):
        self.point = point
        super().__init__(f"denominator vanishes at {point}")


class NonGenericPoint(OsculantError):
    """Jet ranks at the given point fall below their generic values."""


class UnsupportedRationalCoords(OsculantError):
    """The operation needs polynomial coordinates."""


class EmptySystem(OsculantError):
    """An operation needs a nonempty linear system."""


class DegreeMismatch(OsculantError, ValueError):
    """Forms of different degree or in different variable counts."""


class UnknownVariety(OsculantError, KeyError):
    def __str__(self):
        return f"unknown catalog variety {self.args[0]!r}"


class NotImmersionWarning(UserWarning):
    """The parametrization has rank < k at a generic point."""


# parser errors


class ParseError(OsculantError, ValueError):
    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class ExpressionSyntaxError(ParseError):
    pass


class UnknownVariable(ParseError):
    pass


class IndexOutOfRange(ParseError):
    pass


class DivisionByZeroLiteral(ParseError):
    pass
