# Copyright (c) fixpoint authors. All rights reserved.
#
# This source code is licensed under the BSD license found in the
# LICENSE file in the root directory of this source tree.

"""Reads canonical and pretty kernel texts.

Pretty texts may put whitespace between any two tokens and may carry ``//``
comments up to the end of a line; neither survives into the canonical form.
"""
import functools
from typing import List, Set, Tuple

from ..errors import ParseError
from .escape import unescape
from .syntax import (
    ELSE,
    EVAL,
    IFEQ,
    STRCAT,
    STRCATFN,
    STRCATQ,
    STRCPY,
    Call,
    Cat,
    CatEsc,
    CatFn,
    Copy,
    Eval,
    FunctionDef,
    IfEq,
    KernelProgram,
    Literal,
    Register,
    Source,
    Stmt,
    is_identifier,
    serialize,
)

__all__ = ["parse", "canonicalize", "fn_name", "header_prefix"]

WHITESPACE = b" \t\r\n"
WORD_CHARS = b"abcdefghijklmnopqrstuvwxyz0123456789_"


class _Reader:
    def __init__(self, text: bytes) -> None:
        self.text = text
        self.pos = 0

    def skip(self) -> None:
        text = self.text
        while self.pos < len(text):
            if text[self.pos] in WHITESPACE:
                self.pos += 1
            elif text.startswith(b"//", self.pos):
                end = text.find(b"\n", self.pos)
                self.pos = len(text) if end < 0 else end + 1
            else:
                break

    def at_end(self) -> bool:
        self.skip()
        return self.pos >= len(self.text)

    def peek(self) -> bytes:
        self.skip()
        return self.text[self.pos : self.pos + 1]

    def expect(self, token: bytes) -> None:
        self.skip()
        if not self.text.startswith(token, self.pos):
            found = self.text[self.pos : self.pos + 1]
            if found == b"":
                raise ParseError(f"expected {token.decode()!r}, reached end of text", self.pos)
            raise ParseError(f"expected {token.decode()!r}, found {found.decode('latin-1')!r}", self.pos)
        self.pos += len(token)

    def word(self) -> Tuple[bytes, int]:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in WORD_CHARS:
            self.pos += 1
        if self.pos == start:
            found = self.text[start : start + 1].decode("latin-1")
            raise ParseError(f"expected a name, found {found!r}" if found else "expected a name", start)
        return self.text[start : self.pos], start

    def register(self) -> Register:
        name, start = self.word()
        try:
            return Register(name.decode("ascii"))
        except ValueError:
            raise ParseError(f"unknown register {name.decode('ascii')!r}", start) from None

    def literal(self) -> Literal:
        self.skip()
        start = self.pos
        self.expect(b'"')
        text = self.text
        i = self.pos
        while True:
            if i >= len(text):
                raise ParseError("unterminated literal", start)
            ch = text[i : i + 1]
            if ch == b"\\":
                if text[i + 1 : i + 2] not in (b"\\", b'"'):
                    raise ParseError("bad escape in literal", i)
                i += 2
            elif ch == b'"':
                break
            else:
                i += 1
        raw = text[self.pos : i]
        self.pos = i + 1
        return Literal(unescape(raw))

    def source(self) -> Source:
        if self.peek() == b'"':
            return self.literal()
        return self.register()

    def block(self) -> Tuple[Stmt, ...]:
        """Statements up to, and including, the closing brace."""
        body: List[Stmt] = []
        while True:
            nxt = self.peek()
            if nxt == b"}":
                self.pos += 1
                return tuple(body)
            if nxt == b"":
                raise ParseError("unbalanced braces", self.pos)
            body.append(self.statement())

    def _pair(self) -> Tuple[Register, Register]:
        self.expect(b"(")
        dst = self.register()
        self.expect(b",")
        src = self.register()
        self.expect(b")")
        self.expect(b";")
        return dst, src

    def statement(self) -> Stmt:
        keyword, start = self.word()
        if keyword == STRCPY or keyword == STRCAT:
            self.expect(b"(")
            dst = self.register()
            self.expect(b",")
            src = self.source()
            self.expect(b")")
            self.expect(b";")
            return Copy(dst, src) if keyword == STRCPY else Cat(dst, src)
        if keyword == STRCATQ:
            return CatEsc(*self._pair())
        if keyword == STRCATFN:
            return CatFn(*self._pair())
        if keyword == EVAL:
            self.expect(b"(")
            self.expect(b")")
            self.expect(b";")
            return Eval()
        if keyword == IFEQ:
            self.expect(b"(")
            reg = self.register()
            self.expect(b",")
            lit = self.literal()
            self.expect(b")")
            self.expect(b"{")
            then = self.block()
            else_word, else_start = self.word()
            if else_word != ELSE:
                raise ParseError("expected 'else'", else_start)
            self.expect(b"{")
            orelse = self.block()
            return IfEq(reg, lit, then, orelse)
        if is_identifier(keyword):
            self.expect(b"(")
            self.expect(b")")
            self.expect(b";")
            return Call(keyword)
        raise ParseError(f"unknown statement {keyword.decode('latin-1')!r}", start)

    def definition(self) -> FunctionDef:
        name, start = self.word()
        if not is_identifier(name):
            raise ParseError(f"bad identifier {name.decode('latin-1')!r}", start)
        self.expect(b"(")
        self.expect(b")")
        self.expect(b"{")
        return FunctionDef(name, self.block())


@functools.lru_cache(maxsize=4096)
def parse(text: bytes) -> KernelProgram:
    """Parses a kernel text, canonical or pretty, into a :class:`KernelProgram`.

    Raises :exc:`ParseError` with the byte offset of the problem.
    """
    reader = _Reader(text)
    defs: List[FunctionDef] = []
    seen: Set[bytes] = set()
    while not reader.at_end():
        start = reader.pos
        d = reader.definition()
        if d.name in seen:
            raise ParseError(f"duplicate definition {d.name.decode('ascii')!r}", start)
        seen.add(d.name)
        defs.append(d)
    if not defs:
        raise ParseError("empty program", 0)
    return KernelProgram(tuple(defs))


def fn_name(text: bytes) -> bytes:
    """Name of the function whose definition ``text`` starts with.
    ::

        fn_name(b"id_(){strcpy(c,a);}") == b"id_"

    """
    i = text.find(b"(")
    if i < 0:
        raise ParseError("no '(' in definition header")
    name = text[:i]
    if not is_identifier(name):
        raise ParseError(f"bad identifier {name.decode('latin-1')!r} in definition header", 0)
    return name


def header_prefix(text: bytes) -> bytes:
    """Run-time counterpart of :func:`fn_name`: everything before the first
    ``(``, or the whole text when there is none. Never fails.
    """
    i = text.find(b"(")
    return text if i < 0 else text[:i]


def canonicalize(text: bytes) -> bytes:
    """Canonical form of a pretty or canonical text."""
    return serialize(parse(text))
