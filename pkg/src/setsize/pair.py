"""Size pairs ``(r, N(r))``: a scale together with a count.

Scales are exact positive rationals, or :data:`LIMIT_ZERO`, a marker for
``r -> 0`` that supports equality and rendering only.  Pairs combine only
at a shared scale.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Union

from .errors import (
    DegenerateCount,
    LimitScaleUnsupported,
    NonIntegerPower,
    ParseError,
    ScaleMismatch,
    ScaleNotSubUnit,
    SymbolicUnsupported,
    UnitCountExcluded,
)
from .graduation import (
    ONE,
    ZERO,
    Cursor,
    Finite,
    MValue,
    Ordering,
    as_mvalue,
    m_add,
    m_compare,
    m_mul,
    m_sub,
    parse_sum,
)


class LimitZero:
    """The symbolic scale ``r -> 0``; rendered ``0+``."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "LIMIT_ZERO"

    def __str__(self):
        return "0+"

    def __reduce__(self):
        return (LimitZero, ())


LIMIT_ZERO = LimitZero()

Scale = Union[Fraction, LimitZero]


def to_rational(x) -> Fraction:
    """Exact rational from a number or from ``"p/q"``/decimal text.

    Floats go through their shortest repr, so ``0.1`` becomes ``1/10``.
    """
    if isinstance(x, bool):
        raise TypeError("booleans are not numbers here")
    if isinstance(x, Rational):
        return Fraction(x)
    if isinstance(x, float):
        return Fraction(repr(x))
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"not a rational number: {x!r}") from None
    raise TypeError(f"cannot use {x!r} as a rational")


def make_scale(x) -> Scale:
    if x is LIMIT_ZERO or (isinstance(x, str) and x.strip() == "0+"):
        return LIMIT_ZERO
    r = to_rational(x)
    if r <= 0:
        raise ValueError(f"scale must be positive, got {r}")
    return r


def render_scale(r: Scale) -> str:
    return str(r)


@dataclass(frozen=True, slots=True)
class SizePair:
    scale: Scale
    count: MValue

    def __post_init__(self):
        object.__setattr__(self, "scale", make_scale(self.scale))
        object.__setattr__(self, "count", as_mvalue(self.count))

    @property
    def is_zero(self) -> bool:
        return self.count == ZERO

    def __str__(self):
        return f"({render_scale(self.scale)}, {self.count})"

    def compact(self) -> str:
        return str(self).replace(" ", "")


def _shared_scale(x: SizePair, y: SizePair) -> Scale:
    if x.scale != y.scale:
        raise ScaleMismatch(f"{x} and {y} are at different scales")
    return x.scale


def _rational_scale(x: SizePair) -> Fraction:
    if x.scale is LIMIT_ZERO:
        raise LimitScaleUnsupported(f"no arithmetic on the limit scale in {x}")
    return x.scale


def pair_add(x: SizePair, y: SizePair) -> SizePair:
    r = _shared_scale(x, y)
    _rational_scale(x)
    return SizePair(r, m_add(x.count, y.count))


def pair_sub(x: SizePair, y: SizePair) -> SizePair:
    r = _shared_scale(x, y)
    _rational_scale(x)
    return SizePair(r, m_sub(x.count, y.count))


def pair_mul(x: SizePair, y: SizePair) -> SizePair:
    r = _rational_scale(x)
    _rational_scale(y)
    _shared_scale(x, y)
    return SizePair(r * r, m_mul(x.count, y.count))


def integer_root(n: int, k: int):
    """Exact k-th root of n, or None when n is not a perfect k-th power."""
    if n < 2 or k == 1:
        return n
    # integer Newton from above converges to floor(n ** (1/k))
    x = 1 << -(-n.bit_length() // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    return x if x**k == n else None


def pair_scalar(c, y: SizePair) -> SizePair:
    """``c . (r, N) = (r, N**c)``, only when the power stays an integer."""
    r = _rational_scale(y)
    if not isinstance(y.count, Finite):
        raise SymbolicUnsupported(f"scalar power of symbolic count in {y}")
    if y.count == ONE:
        raise UnitCountExcluded(f"scalar multiple of {y} is excluded (count 1)")
    c = to_rational(c)
    if c < 0:
        raise NonIntegerPower(f"negative power {c} leaves the integers")
    n = y.count.value
    root = integer_root(n, c.denominator)
    if root is None:
        raise NonIntegerPower(f"{n}^({c}) is not an integer")
    return SizePair(r, Finite(root**c.numerator))


def pair_distance(x: SizePair, y: SizePair) -> SizePair:
    r = _shared_scale(x, y)
    _rational_scale(x)
    if not (isinstance(x.count, Finite) and isinstance(y.count, Finite)):
        raise SymbolicUnsupported("distance needs finite counts")
    return SizePair(r, Finite(abs(x.count.value - y.count.value)))


def log_inverse_scale(r: Fraction) -> float:
    # ln(q) - ln(p) keeps precision for tiny r like 3**-20
    return math.log(r.denominator) - math.log(r.numerator)


def pair_dimension(x: SizePair) -> float:
    """``ln N / ln(1/r)`` for a sub-unit scale and a count of at least 2."""
    r = _rational_scale(x)
    if not isinstance(x.count, Finite):
        raise SymbolicUnsupported(f"dimension of symbolic count in {x}")
    if r >= 1:
        raise ScaleNotSubUnit(f"scale {r} is not below 1")
    n = x.count.value
    if n < 2:
        raise DegenerateCount(f"dimension undefined for count {n}")
    return math.log(n) / log_inverse_scale(r)


def pair_compare(x: SizePair, y: SizePair) -> Ordering:
    if x.scale != y.scale:
        return Ordering.INCOMPARABLE
    return m_compare(x.count, y.count)


def parse_scale(cur: Cursor) -> Scale:
    start = cur.pos
    num = cur.integer()
    if num == 0 and cur.peek() == "+":
        cur.pos += 1
        return LIMIT_ZERO
    den = 1
    if cur.take("/"):
        den = cur.integer()
    if num == 0 or den == 0:
        raise ParseError("scale must be a positive rational", position=start)
    return Fraction(num, den)


def parse_pair_at(cur: Cursor) -> SizePair:
    cur.expect("(")
    r = parse_scale(cur)
    cur.expect(",")
    count = parse_sum(cur)
    cur.expect(")")
    return SizePair(r, count)


def parse_pair(text: str) -> SizePair:
    cur = Cursor(text)
    pair = parse_pair_at(cur)
    if not cur.at_end():
        raise ParseError(f"unexpected {cur.peek()!r}", position=cur.pos)
    return pair
