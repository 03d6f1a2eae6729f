"""A small expression language for GF(2) power series.

Grammar (whitespace ignored, '-' means '+' in characteristic 2)::

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := atom ('^' uint)?
    atom   := 'z' | uint | 'C' | '(' expr ')'

`C` is the Catalan generating function.  Integer literals of any size are
accepted and reduced mod 2 on evaluation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Union

from . import fps
from .errors import DivisorNotUnit, ExprSyntaxError, UnknownIdentifier, ZeroConstantTerm
from .fps import Gf2Series

__all__ = [
    "Num", "Z", "Cat", "Add", "Sub", "Mul", "Div", "Pow",
    "SeriesExpr", "parse", "evaluate", "to_text", "eval_text",
]


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Z:
    pass


@dataclass(frozen=True)
class Cat:
    pass


@dataclass(frozen=True)
class Add:
    left: "SeriesExpr"
    right: "SeriesExpr"


@dataclass(frozen=True)
class Sub:
    left: "SeriesExpr"
    right: "SeriesExpr"


@dataclass(frozen=True)
class Mul:
    left: "SeriesExpr"
    right: "SeriesExpr"


@dataclass(frozen=True)
class Div:
    left: "SeriesExpr"
    right: "SeriesExpr"


@dataclass(frozen=True)
class Pow:
    base: "SeriesExpr"
    exponent: int


SeriesExpr = Union[Num, Z, Cat, Add, Sub, Mul, Div, Pow]


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.data = text.encode("utf-8")
        self.pos = 0

    def error(self, message: str, offset: int | None = None):
        raise ExprSyntaxError(message, self.pos if offset is None else offset, self.text)

    def skip_ws(self):
        while self.pos < len(self.data) and self.data[self.pos] in b" \t\r\n":
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        if self.pos >= len(self.data):
            return ""
        return chr(self.data[self.pos])

    def uint(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.data) and 0x30 <= self.data[self.pos] <= 0x39:
            self.pos += 1
        if start == self.pos:
            self.error("expected unsigned integer")
        return int(self.data[start:self.pos])

    def parse(self) -> SeriesExpr:
        node = self.expr()
        if self.peek():
            self.error(f"unexpected character {self.peek()!r}")
        return node

    def expr(self) -> SeriesExpr:
        node = self.term()
        while self.peek() in ("+", "-"):
            op = self.peek()
            self.pos += 1
            rhs = self.term()
            node = Add(node, rhs) if op == "+" else Sub(node, rhs)
        return node

    def term(self) -> SeriesExpr:
        node = self.factor()
        while self.peek() in ("*", "/"):
            op = self.peek()
            self.pos += 1
            rhs = self.factor()
            node = Mul(node, rhs) if op == "*" else Div(node, rhs)
        return node

    def factor(self) -> SeriesExpr:
        node = self.atom()
        if self.peek() == "^":
            self.pos += 1
            node = Pow(node, self.uint())
        return node

    def atom(self) -> SeriesExpr:
        ch = self.peek()
        if ch == "":
            self.error("unexpected end of input")
        if ch == "(":
            self.pos += 1
            node = self.expr()
            if self.peek() != ")":
                self.error("expected ')'")
            self.pos += 1
            return node
        if ch.isdigit():
            return Num(self.uint())
        if ch.isalpha() or ch == "_":
            start = self.pos
            while self.pos < len(self.data) and (
                chr(self.data[self.pos]).isalnum() or self.data[self.pos] == 0x5F
            ):
                self.pos += 1
            name = self.data[start:self.pos].decode()
            if name == "z":
                return Z()
            if name == "C":
                return Cat()
            raise UnknownIdentifier(
                f"unknown identifier {name!r} (only 'z' and 'C' are defined)", start, self.text
            )
        self.error(f"unexpected character {ch!r}")


def parse(text: str) -> SeriesExpr:
    return _Parser(text).parse()


_PREC = {Add: 1, Sub: 1, Mul: 2, Div: 2}
_SYM = {Add: "+", Sub: "-", Mul: "*", Div: "/"}


def to_text(e: SeriesExpr) -> str:
    """Render with the minimal parentheses needed for a structurally identical reparse."""
    if isinstance(e, Num):
        return str(e.value)
    if isinstance(e, Z):
        return "z"
    if isinstance(e, Cat):
        return "C"
    if isinstance(e, Pow):
        inner = to_text(e.base)
        if not isinstance(e.base, (Num, Z, Cat)):
            inner = f"({inner})"
        return f"{inner}^{e.exponent}"
    prec = _PREC[type(e)]
    left = to_text(e.left)
    if _PREC.get(type(e.left), 3) < prec:
        left = f"({left})"
    right = to_text(e.right)
    if _PREC.get(type(e.right), 3) <= prec:
        right = f"({right})"
    return f"{left}{_SYM[type(e)]}{right}"


def evaluate(e: SeriesExpr, trunc: int) -> Gf2Series:
    if trunc < 0:
        raise ValueError("truncation must be >= 0")
    if isinstance(e, Num):
        return Gf2Series.constant(e.value, trunc)
    if isinstance(e, Z):
        return Gf2Series.z(trunc)
    if isinstance(e, Cat):
        return fps.catalan(trunc)
    if isinstance(e, Pow):
        return fps.power(evaluate(e.base, trunc), e.exponent)
    a = evaluate(e.left, trunc)
    b = evaluate(e.right, trunc)
    if isinstance(e, (Add, Sub)):
        return fps.add(a, b)
    if isinstance(e, Mul):
        return fps.mul(a, b)
    try:
        return fps.mul(a, fps.inverse(b))
    except ZeroConstantTerm:
        raise DivisorNotUnit(f"divisor {to_text(e.right)!r} has zero constant term mod 2") from None


@lru_cache(maxsize=512)
def eval_text(text: str, trunc: int) -> Gf2Series:
    return evaluate(parse(text), trunc)
