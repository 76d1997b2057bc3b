"""Exact values for graduations and counts.

Every count and every graduation is an :data:`MValue`: a non-negative
integer (:class:`Finite`) or a symbolic term over :data:`OMEGA`, the
cardinality of the naturals.

Normal form is deliberately thin: finite children fold and 0/1 are
absorbed.  Nothing else simplifies, so ``w + w`` stays a sum.

Text grammar (rendering and parsing agree)::

    sum     := product ('+' product)*
    product := factor ('*' factor)*
    factor  := INT | 'w' | '2^' factor | '(' sum ')'

``Pow2`` of an atom renders bare (``2^w``); of anything else it renders
with parentheses (``2^(2^w)``).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Union

from .errors import ExponentTooLarge, ParseError, SymbolicUnsupported, UnderflowError

EXPONENT_BOUND = 10**6

# str(int) and int(str) refuse more than 4300 digits; convert in halves above this
_DIGIT_CHUNK = 4000


def int_to_decimal(n: int) -> str:
    if n < 0:
        return "-" + int_to_decimal(-n)
    if n.bit_length() < 3 * _DIGIT_CHUNK:
        return str(n)
    k = n.bit_length() * 3 // 20  # about half the decimal digits
    high, low = divmod(n, 10**k)
    return int_to_decimal(high) + int_to_decimal(low).zfill(k)


def decimal_to_int(text: str) -> int:
    if len(text) <= _DIGIT_CHUNK:
        return int(text)
    k = len(text) // 2
    return decimal_to_int(text[:-k]) * 10**k + decimal_to_int(text[-k:])


class Ordering(enum.Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"
    INCOMPARABLE = "incomparable"

    def flipped(self) -> "Ordering":
        if self is Ordering.LESS:
            return Ordering.GREATER
        if self is Ordering.GREATER:
            return Ordering.LESS
        return self


@dataclass(frozen=True, slots=True)
class Finite:
    value: int

    def __post_init__(self):
        if isinstance(self.value, bool) or not isinstance(self.value, int):
            raise TypeError(f"Finite needs an int, got {type(self.value).__name__}")
        if self.value < 0:
            raise UnderflowError(f"negative count {self.value}")

    def __str__(self):
        return int_to_decimal(self.value)


@dataclass(frozen=True, slots=True)
class Omega:
    def __str__(self):
        return "w"


@dataclass(frozen=True, slots=True)
class Pow2:
    exponent: "MValue"

    def __str__(self):
        inner = str(self.exponent)
        if isinstance(self.exponent, (Finite, Omega)) or inner.startswith("("):
            return f"2^{inner}"
        return f"2^({inner})"


@dataclass(frozen=True, slots=True)
class Sum:
    left: "MValue"
    right: "MValue"

    def __str__(self):
        return f"({self.left}+{self.right})"


@dataclass(frozen=True, slots=True)
class Prod:
    left: "MValue"
    right: "MValue"

    def __str__(self):
        return f"({self.left}*{self.right})"


MValue = Union[Finite, Omega, Pow2, Sum, Prod]

ZERO = Finite(0)
ONE = Finite(1)
OMEGA = Omega()


def as_mvalue(x) -> MValue:
    """Coerce an int (or an existing MValue) to an MValue."""
    if isinstance(x, (Finite, Omega, Pow2, Sum, Prod)):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return Finite(x)
    raise TypeError(f"cannot use {x!r} as a count")


def is_finite(x: MValue) -> bool:
    return isinstance(x, Finite)


def m_add(a: MValue, b: MValue) -> MValue:
    if isinstance(a, Finite) and isinstance(b, Finite):
        return Finite(a.value + b.value)
    if a == ZERO:
        return b
    if b == ZERO:
        return a
    if isinstance(b, Finite):
        a, b = b, a
    return Sum(a, b)


def m_sub(a: MValue, b: MValue) -> MValue:
    """Exact difference of two finite values; never negative."""
    if not (isinstance(a, Finite) and isinstance(b, Finite)):
        raise SymbolicUnsupported(f"cannot subtract {b} from {a}")
    if b.value > a.value:
        raise UnderflowError(f"{a} - {b} is negative")
    return Finite(a.value - b.value)


def m_mul(a: MValue, b: MValue) -> MValue:
    if isinstance(a, Finite) and isinstance(b, Finite):
        return Finite(a.value * b.value)
    if a == ZERO or b == ZERO:
        return ZERO
    if a == ONE:
        return b
    if b == ONE:
        return a
    if isinstance(b, Finite):
        a, b = b, a
    return Prod(a, b)


def m_pow2(a: MValue, bound: int = EXPONENT_BOUND) -> MValue:
    if isinstance(a, Finite):
        if a.value > bound:
            raise ExponentTooLarge(f"2^{a.value} exceeds the exponent bound {bound}")
        return Finite(1 << a.value)
    return Pow2(a)


def normalize(x: MValue) -> MValue:
    if isinstance(x, (Finite, Omega)):
        return x
    if isinstance(x, Pow2):
        return m_pow2(normalize(x.exponent))
    if isinstance(x, Sum):
        return m_add(normalize(x.left), normalize(x.right))
    if isinstance(x, Prod):
        return m_mul(normalize(x.left), normalize(x.right))
    raise TypeError(f"not an MValue: {x!r}")


def tower_height(x: MValue):
    """Height of ``2^(2^(...w))`` towers (``w`` has height 0), else None."""
    height = 0
    while isinstance(x, Pow2):
        x = x.exponent
        height += 1
    return height if isinstance(x, Omega) else None


def omega_tower(height: int) -> MValue:
    x: MValue = OMEGA
    for _ in range(height):
        x = Pow2(x)
    return x


def m_compare(a: MValue, b: MValue) -> Ordering:
    """Order finite values totally and omega towers by height.

    Finite values sit below every tower.  Structurally equal terms are
    equal; any other symbolic pair is incomparable.
    """
    if isinstance(a, Finite) and isinstance(b, Finite):
        if a.value < b.value:
            return Ordering.LESS
        return Ordering.EQUAL if a.value == b.value else Ordering.GREATER
    if a == b:
        return Ordering.EQUAL
    ha, hb = tower_height(a), tower_height(b)
    if isinstance(a, Finite) and hb is not None:
        return Ordering.LESS
    if isinstance(b, Finite) and ha is not None:
        return Ordering.GREATER
    if ha is not None and hb is not None:
        return Ordering.LESS if ha < hb else Ordering.GREATER
    return Ordering.INCOMPARABLE


# -- parsing ---------------------------------------------------------------


class Cursor:
    """Character cursor shared by the text parsers."""

    def __init__(self, text: str, pos: int = 0):
        self.text = text
        self.pos = pos

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, n: int = 1) -> str:
        self.skip()
        return self.text[self.pos:self.pos + n]

    def take(self, token: str) -> bool:
        if self.peek(len(token)) == token:
            self.pos += len(token)
            return True
        return False

    def expect(self, token: str):
        if not self.take(token):
            found = self.peek() or "end of input"
            raise ParseError(f"expected {token!r}, found {found!r}", position=self.pos)

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            found = self.peek() or "end of input"
            raise ParseError(f"expected an integer, found {found!r}", position=start)
        return decimal_to_int(self.text[start:self.pos])

    def at_end(self) -> bool:
        self.skip()
        return self.pos >= len(self.text)


def parse_sum(cur: Cursor) -> MValue:
    value = parse_product(cur)
    while cur.peek() == "+":
        cur.pos += 1
        value = m_add(value, parse_product(cur))
    return value


def parse_product(cur: Cursor) -> MValue:
    value = parse_factor(cur)
    while cur.peek() == "*":
        cur.pos += 1
        value = m_mul(value, parse_factor(cur))
    return value


def parse_factor(cur: Cursor) -> MValue:
    ch = cur.peek()
    if ch == "w":
        cur.pos += 1
        return OMEGA
    if ch == "(":
        cur.pos += 1
        value = parse_sum(cur)
        cur.expect(")")
        return value
    start = cur.pos
    n = cur.integer()
    if cur.peek() == "^":
        if n != 2:
            raise ParseError("only base 2 powers are supported", position=start)
        cur.pos += 1
        return m_pow2(parse_factor(cur))
    return Finite(n)


def parse_mvalue(text: str) -> MValue:
    cur = Cursor(text)
    value = parse_sum(cur)
    if not cur.at_end():
        raise ParseError(f"unexpected {cur.peek()!r}", position=cur.pos)
    return value
