# Copyright (c) fixpoint authors. All rights reserved.
#
# This source code is licensed under the BSD license found in the
# LICENSE file in the root directory of this source tree.

"""Integer expressions of ``(( name = expr ))`` commands.

Operators, loosest first: ``+ -``, ``*``, unary ``-``, ``**``. ``**`` is
right-associative and binds tighter than unary minus, so ``-2**2 == -4``.
Values are signed 64-bit integers that wrap on overflow.
"""
from dataclasses import dataclass
import re
from typing import List, Mapping, Tuple, Union

from ..errors import ShellError, ShellParseError

__all__ = ["Num", "Name", "Neg", "BinOp", "Expr", "parse_assignment", "evaluate"]

_TOKEN = re.compile(rb"(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\*\*|[-+*()=])")

_MODULUS = 1 << 64


def _wrap(value: int) -> int:
    return (value + (1 << 63)) % _MODULUS - (1 << 63)


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Name:
    name: bytes


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class BinOp:
    op: bytes
    left: "Expr"
    right: "Expr"


Expr = Union[Num, Name, Neg, BinOp]

_Token = Tuple[str, bytes, int]


def _tokenize(text: bytes) -> List[_Token]:
    tokens: List[_Token] = []
    pos = 0
    while True:
        while pos < len(text) and text[pos : pos + 1].isspace():
            pos += 1
        if pos >= len(text):
            return tokens
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ShellParseError(f"bad character {text[pos:pos + 1].decode('latin-1')!r} in arithmetic", pos)
        if m.group(1) is not None:
            tokens.append(("num", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), m.start(2)))
        else:
            tokens.append(("op", m.group(3), m.start(3)))
        pos = m.end()


class _Parser:
    def __init__(self, text: bytes) -> None:
        self.tokens = _tokenize(text)
        self.i = 0
        self.end = len(text)

    def peek(self) -> bytes:
        if self.i < len(self.tokens) and self.tokens[self.i][0] == "op":
            return self.tokens[self.i][1]
        return b""

    def offset(self) -> int:
        return self.tokens[self.i][2] if self.i < len(self.tokens) else self.end

    def take(self, op: bytes) -> None:
        if self.peek() != op:
            raise ShellParseError(f"expected {op.decode()!r} in arithmetic", self.offset())
        self.i += 1

    def expr(self) -> Expr:
        left = self.term()
        while self.peek() in (b"+", b"-"):
            op = self.peek()
            self.i += 1
            left = BinOp(op, left, self.term())
        return left

    def term(self) -> Expr:
        left = self.unary()
        while self.peek() == b"*":
            self.i += 1
            left = BinOp(b"*", left, self.unary())
        return left

    def unary(self) -> Expr:
        if self.peek() == b"-":
            self.i += 1
            return Neg(self.unary())
        if self.peek() == b"+":
            self.i += 1
            return self.unary()
        return self.power()

    def power(self) -> Expr:
        base = self.atom()
        if self.peek() == b"**":
            self.i += 1
            return BinOp(b"**", base, self.unary())
        return base

    def atom(self) -> Expr:
        if self.i >= len(self.tokens):
            raise ShellParseError("unexpected end of arithmetic", self.end)
        kind, value, offset = self.tokens[self.i]
        if kind == "num":
            self.i += 1
            return Num(_wrap(int(value)))
        if kind == "name":
            self.i += 1
            return Name(value)
        if value == b"(":
            self.i += 1
            inner = self.expr()
            self.take(b")")
            return inner
        raise ShellParseError(f"unexpected {value.decode()!r} in arithmetic", offset)


def parse_assignment(text: bytes) -> Tuple[bytes, Expr]:
    """Reads ``name = expr``.
    ::

        parse_assignment(b"  a = 9**9 ") == (b"a", BinOp(b"**", Num(9), Num(9)))

    """
    parser = _Parser(text)
    if not parser.tokens or parser.tokens[0][0] != "name":
        raise ShellParseError("arithmetic must assign to a name", parser.offset())
    name = parser.tokens[0][1]
    parser.i = 1
    parser.take(b"=")
    expr = parser.expr()
    if parser.i != len(parser.tokens):
        raise ShellParseError("trailing text in arithmetic", parser.offset())
    return name, expr


def _lookup(name: bytes, variables: Mapping[bytes, bytes]) -> int:
    raw = variables.get(name, b"").strip()
    if not raw:
        return 0
    try:
        return _wrap(int(raw))
    except ValueError:
        raise ShellError(f"{name.decode('latin-1')}: not an integer ({raw!r})") from None


def evaluate(expr: Expr, variables: Mapping[bytes, bytes]) -> int:
    """Value of ``expr``; unset or empty variables read as 0."""
    if isinstance(expr, Num):
        return expr.value
    if isinstance(expr, Name):
        return _lookup(expr.name, variables)
    if isinstance(expr, Neg):
        return _wrap(-evaluate(expr.operand, variables))

    left = evaluate(expr.left, variables)
    right = evaluate(expr.right, variables)
    if expr.op == b"+":
        return _wrap(left + right)
    if expr.op == b"-":
        return _wrap(left - right)
    if expr.op == b"*":
        return _wrap(left * right)
    if right < 0:
        raise ShellError(f"negative exponent ({right} < 0)")
    return _wrap(pow(left, right, _MODULUS))
