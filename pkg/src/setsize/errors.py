"""Exception types raised across the package."""


class SetSizeError(Exception):
    """Base class for every error raised by :mod:`setsize`."""


class UnderflowError(SetSizeError, ArithmeticError):
    """A difference of counts would be negative."""


class SymbolicUnsupported(SetSizeError, ArithmeticError):
    """The operation is only defined for finite counts."""


class ExponentTooLarge(SetSizeError, OverflowError):
    """2**n would exceed the configured materialization bound."""


class ScaleMismatch(SetSizeError, ValueError):
    """Two pairs or covers were combined at different scales."""


class LimitScaleUnsupported(SetSizeError, ValueError):
    """Arithmetic was attempted on the r -> 0 marker."""


class UnitCountExcluded(SetSizeError, ValueError):
    """Scalar multiplication of a pair whose count is 1."""


class NonIntegerPower(SetSizeError, ValueError):
    """N**c is not a non-negative integer."""


class DegenerateCount(SetSizeError, ValueError):
    """Dimension requested for a pair with count 0 or 1."""


class ScaleNotSubUnit(SetSizeError, ValueError):
    """Dimension requested at a scale r >= 1."""


class UnsupportedModel(SetSizeError, TypeError):
    """The set model kind is not accepted by this operation."""


class NotDisjoint(SetSizeError, ValueError):
    """Sets that must be disjoint share a point."""


class NotASubset(SetSizeError, ValueError):
    """A subset relation required by the caller does not hold."""


class TooFewPoints(SetSizeError, ValueError):
    """A point set is too small for the requested quantity."""


class ScaleNotAligned(SetSizeError, ValueError):
    """A self-similar set was measured off its contraction grid."""


class InsufficientSamples(SetSizeError, ValueError):
    """Fewer than two usable scales for a dimension fit."""


class ParseError(SetSizeError, ValueError):
    """Malformed input text; ``line`` and ``position`` locate it when known."""

    def __init__(self, message, line=None, position=None):
        self.line = line
        self.position = position
        where = []
        if line is not None:
            where.append(f"line {line}")
        if position is not None:
            where.append(f"position {position}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)


class AlgebraError(SetSizeError, ValueError):
    """An operator in a pair expression could not be applied."""

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
