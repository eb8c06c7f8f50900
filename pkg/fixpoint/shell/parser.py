# Copyright (c) fixpoint authors. All rights reserved.
#
# This source code is licensed under the BSD license found in the
# LICENSE file in the root directory of this source tree.

"""Reads mini-shell scripts.

Commands are separated by newlines and ``;``. Words are separated by blanks
and end at an unquoted ``;``, newline, ``>`` or (inside ``$(...)``) ``)``.
Within double quotes the only escapes are ``\\$``, ``\\"`` and ``\\\\``; any
other backslash stays as it is. Outside quotes a backslash takes the next
byte literally.
"""
import functools
from typing import List, Optional, Union

from ..errors import ShellParseError
from .arith import parse_assignment
from .syntax import Arithmetic, Command, Lit, Param, Quoted, Script, Segment, SimpleCommand, Subst, Var, Word

__all__ = ["shell_parse", "script_arity"]

BLANKS = b" \t"
NAME_START = b"abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ_"
NAME_CHARS = NAME_START + b"0123456789"
DIGITS = b"0123456789"

_Plain = Union[Lit, Param, Var, Subst]


class _Reader:
    def __init__(self, text: bytes) -> None:
        self.text = text
        self.pos = 0

    def at(self, offset: int = 0) -> bytes:
        return self.text[self.pos + offset : self.pos + offset + 1]

    def skip_blanks(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos] in BLANKS:
            self.pos += 1

    def script(self, nested: bool) -> Script:
        """Commands up to the end of text, or up to the ``)`` closing a
        substitution when ``nested``.
        """
        commands: List[Command] = []
        start = self.pos
        while True:
            self.skip_blanks()
            ch = self.at()
            if ch == b"":
                if nested:
                    raise ShellParseError("unbalanced parentheses", start - 2)
                return tuple(commands)
            if ch in (b"\n", b";"):
                self.pos += 1
            elif ch == b")":
                if not nested:
                    raise ShellParseError("unbalanced parentheses", self.pos)
                self.pos += 1
                return tuple(commands)
            elif self.text.startswith(b"((", self.pos):
                commands.append(self.arithmetic())
            else:
                commands.append(self.simple(nested))

    def arithmetic(self) -> Arithmetic:
        start = self.pos
        self.pos += 2
        depth = 0
        i = self.pos
        while True:
            if i >= len(self.text):
                raise ShellParseError("unbalanced parentheses", start)
            ch = self.text[i : i + 1]
            if ch == b"(":
                depth += 1
            elif ch == b")":
                if depth == 0 and self.text[i + 1 : i + 2] == b")":
                    break
                depth -= 1
                if depth < 0:
                    raise ShellParseError("unbalanced parentheses", i)
            i += 1
        name, expr = parse_assignment(self.text[self.pos : i])
        self.pos = i + 2
        self.skip_blanks()
        if self.at() not in (b"", b"\n", b";", b")"):
            raise ShellParseError("unexpected text after arithmetic", self.pos)
        return Arithmetic(name, expr)

    def simple(self, nested: bool) -> SimpleCommand:
        words: List[Word] = []
        redirect: Optional[Word] = None
        while True:
            self.skip_blanks()
            ch = self.at()
            if ch in (b"", b"\n", b";") or (nested and ch == b")"):
                return SimpleCommand(tuple(words), redirect)
            if ch == b">":
                self.pos += 1
                self.skip_blanks()
                start = self.pos
                redirect = self.word(nested)
                if not redirect.segments:
                    raise ShellParseError("missing redirect target", start)
            else:
                words.append(self.word(nested))

    def word(self, nested: bool) -> Word:
        segments: List[Segment] = []
        literal = bytearray()

        def flush() -> None:
            if literal:
                segments.append(Lit(bytes(literal)))
                literal.clear()

        while self.pos < len(self.text):
            ch = self.at()
            if ch in b" \t\n;>":
                break
            if ch == b")":
                if nested:
                    break
                raise ShellParseError("unbalanced parentheses", self.pos)
            if ch == b"(":
                raise ShellParseError("unexpected '('", self.pos)
            if ch == b'"':
                flush()
                segments.append(self.quoted())
            elif ch == b"\\":
                if self.pos + 1 >= len(self.text):
                    raise ShellParseError("dangling backslash", self.pos)
                literal += self.at(1)
                self.pos += 2
            elif ch == b"$":
                expansion = self.dollar()
                if isinstance(expansion, Lit):
                    literal += expansion.text
                else:
                    flush()
                    segments.append(expansion)
            else:
                literal += ch
                self.pos += 1
        flush()
        return Word(tuple(segments))

    def quoted(self) -> Quoted:
        start = self.pos
        self.pos += 1
        parts: List[_Plain] = []
        literal = bytearray()
        while True:
            ch = self.at()
            if ch == b"":
                raise ShellParseError("unbalanced quotes", start)
            if ch == b'"':
                self.pos += 1
                break
            if ch == b"\\" and self.at(1) in (b"$", b'"', b"\\"):
                literal += self.at(1)
                self.pos += 2
            elif ch == b"$":
                expansion = self.dollar()
                if isinstance(expansion, Lit):
                    literal += expansion.text
                else:
                    if literal:
                        parts.append(Lit(bytes(literal)))
                        literal.clear()
                    parts.append(expansion)
            else:
                literal += ch
                self.pos += 1
        if literal:
            parts.append(Lit(bytes(literal)))
        return Quoted(tuple(parts))

    def dollar(self) -> _Plain:
        start = self.pos
        nxt = self.at(1)
        if nxt == b"(":
            self.pos += 2
            return Subst(self.script(nested=True))
        if nxt == b"{":
            end = self.text.find(b"}", self.pos + 2)
            if end < 0:
                raise ShellParseError("unbalanced braces", start)
            inner = self.text[self.pos + 2 : end]
            self.pos = end + 1
            if inner and all(c in DIGITS for c in inner):
                return Param(int(inner))
            if inner and inner[0] in NAME_START and all(c in NAME_CHARS for c in inner):
                return Var(inner)
            raise ShellParseError(f"bad substitution ${{{inner.decode('latin-1')}}}", start)
        if nxt != b"" and nxt in DIGITS:
            self.pos += 2
            return Param(int(nxt))
        if nxt != b"" and nxt in NAME_START:
            end = self.pos + 1
            while end < len(self.text) and self.text[end] in NAME_CHARS:
                end += 1
            name = self.text[self.pos + 1 : end]
            self.pos = end
            return Var(name)
        self.pos += 1
        return Lit(b"$")


@functools.lru_cache(maxsize=1024)
def shell_parse(text: bytes) -> Script:
    """Parses a script into its commands.
    ::

        shell_parse(b"set kself $1;cat $1")   # two commands
        shell_parse(b"echo echo hi! > hi")    # echo [echo, hi!] > hi

    Raises :exc:`ShellParseError` on unbalanced quotes or parentheses.
    """
    return _Reader(text).script(nested=False)


def _max_param(script: Script) -> int:
    best = 0

    def visit(segment: Segment) -> None:
        nonlocal best
        if isinstance(segment, Param):
            best = max(best, segment.index)
        elif isinstance(segment, Subst):
            best = max(best, _max_param(segment.script))
        elif isinstance(segment, Quoted):
            for part in segment.parts:
                visit(part)

    for command in script:
        if isinstance(command, SimpleCommand):
            words = command.words + ((command.redirect,) if command.redirect is not None else ())
            for word in words:
                for segment in word.segments:
                    visit(segment)
    return best


def script_arity(content: bytes) -> int:
    """Largest N for which ``$N`` or ``${N}`` is expanded by the script, 0 if none."""
    return _max_param(shell_parse(content))
