"""Evaluator for pair-algebra expressions.

Grammar::

    expr    := term (('+' | '-') term)*
    term    := power ('*' power)*
    power   := primary ('^' (number | '(' number ')'))?
    primary := pair | number | 'dim' '(' expr ')'
             | 'dist' '(' expr ',' expr ')' | '(' expr ')'
    pair    := '(' scale ',' count ')'

``c * x``, ``x * c`` and ``x ^ c`` all mean the scalar power ``(r, N**c)``.
Plain numbers combine with each other as exact rationals; ``dim`` yields a
float.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import AlgebraError, ParseError, SetSizeError
from .graduation import Cursor
from .pair import (
    SizePair,
    pair_add,
    pair_dimension,
    pair_distance,
    pair_mul,
    pair_scalar,
    pair_sub,
    parse_pair_at,
    parse_scale,
)

Value = object  # SizePair, Fraction or float


def _is_number(v) -> bool:
    return isinstance(v, (Fraction, float))


def _kind(v) -> str:
    if isinstance(v, SizePair):
        return "pair"
    return "real" if isinstance(v, float) else "rational"


def _apply(op: str, pos: int, fn, *args):
    try:
        return fn(*args)
    except (SetSizeError, ZeroDivisionError) as exc:
        if isinstance(exc, AlgebraError):
            raise
        raise AlgebraError(f"{op}: {exc}", pos) from exc


def _binary(op: str, pos: int, a, b):
    if isinstance(a, SizePair) and isinstance(b, SizePair):
        fn = {"+": pair_add, "-": pair_sub, "*": pair_mul}[op]
        return _apply(op, pos, fn, a, b)
    if op == "*" and isinstance(a, SizePair) and _is_number(b):
        return _apply(op, pos, pair_scalar, b, a)
    if op == "*" and _is_number(a) and isinstance(b, SizePair):
        return _apply(op, pos, pair_scalar, a, b)
    if _is_number(a) and _is_number(b):
        if op == "+":
            return a + b
        if op == "-":
            return a - b
        return a * b
    raise AlgebraError(f"cannot apply {op!r} to {_kind(a)} and {_kind(b)}", pos)


class _Parser:
    def __init__(self, text: str):
        self.cur = Cursor(text)

    def expr(self):
        value = self.term()
        while self.cur.peek() in ("+", "-"):
            op, pos = self.cur.peek(), self.cur.pos
            self.cur.pos += 1
            value = _binary(op, pos, value, self.term())
        return value

    def term(self):
        value = self.power()
        while self.cur.peek() == "*":
            pos = self.cur.pos
            self.cur.pos += 1
            value = _binary("*", pos, value, self.power())
        return value

    def power(self):
        value = self.primary()
        if self.cur.peek() == "^":
            pos = self.cur.pos
            self.cur.pos += 1
            if self.cur.take("("):
                c = self.number()
                self.cur.expect(")")
            else:
                c = self.number()
            if isinstance(value, SizePair):
                return _apply("^", pos, pair_scalar, c, value)
            if c.denominator != 1:
                raise AlgebraError("number powers need an integer exponent", pos)
            return _apply("^", pos, lambda: value ** int(c))
        return value

    def number(self) -> Fraction:
        cur = self.cur
        cur.skip()
        start = cur.pos
        cur.integer()
        if cur.pos < len(cur.text) and cur.text[cur.pos] == ".":
            cur.pos += 1
            cur.integer()
        text = cur.text[start:cur.pos]
        if cur.take("/"):
            den = cur.integer()
            if den == 0:
                raise ParseError("zero denominator", position=start)
            return Fraction(text) / den
        return Fraction(text)

    def _pair_ahead(self) -> bool:
        probe = Cursor(self.cur.text, self.cur.pos)
        probe.expect("(")
        try:
            parse_scale(probe)
        except ParseError:
            return False
        return probe.peek() == ","

    def primary(self):
        cur = self.cur
        ch = cur.peek()
        if ch == "(":
            if self._pair_ahead():
                return parse_pair_at(cur)
            cur.pos += 1
            value = self.expr()
            cur.expect(")")
            return value
        for name in ("dist", "dim"):
            if cur.peek(len(name)) == name:
                pos = cur.pos
                cur.pos += len(name)
                cur.expect("(")
                a = self.expr()
                if name == "dist":
                    cur.expect(",")
                    b = self.expr()
                    cur.expect(")")
                    if not (isinstance(a, SizePair) and isinstance(b, SizePair)):
                        raise AlgebraError("dist needs two pairs", pos)
                    return _apply("dist", pos, pair_distance, a, b)
                cur.expect(")")
                if not isinstance(a, SizePair):
                    raise AlgebraError("dim needs a pair", pos)
                return _apply("dim", pos, pair_dimension, a)
        if ch.isdigit():
            return self.number()
        raise ParseError(f"unexpected {ch or 'end of input'!r}", position=cur.pos)


def evaluate(text: str):
    parser = _Parser(text)
    value = parser.expr()
    if not parser.cur.at_end():
        raise ParseError(f"unexpected {parser.cur.peek()!r}", position=parser.cur.pos)
    return value


def render_value(v) -> str:
    if isinstance(v, SizePair):
        return v.compact()
    if isinstance(v, float):
        return repr(v)
    return str(v)


def value_kind(v) -> str:
    return _kind(v)
