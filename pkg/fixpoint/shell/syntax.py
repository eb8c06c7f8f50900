# Copyright (c) fixpoint authors. All rights reserved.
#
# This source code is licensed under the BSD license found in the
# LICENSE file in the root directory of this source tree.

"""Parsed form of mini-shell scripts.

A script is a tuple of commands. A simple command is a tuple of words plus an
optional redirect target; a word is a tuple of segments that are expanded and
glued together when the command runs.
"""
from dataclasses import dataclass
from typing import Optional, Tuple, Union

from .arith import Expr

__all__ = [
    "Lit",
    "Param",
    "Var",
    "Subst",
    "Quoted",
    "Segment",
    "Word",
    "SimpleCommand",
    "Arithmetic",
    "Command",
    "Script",
]


@dataclass(frozen=True)
class Lit:
    text: bytes


@dataclass(frozen=True)
class Param:
    """``$N`` or ``${N}``."""

    index: int


@dataclass(frozen=True)
class Var:
    """``$name`` or ``${name}``."""

    name: bytes


@dataclass(frozen=True)
class Subst:
    """``$(...)``: the captured stdout of ``script``, trailing newlines removed."""

    script: "Script"


@dataclass(frozen=True)
class Quoted:
    """A double-quoted span. Never contains another :class:`Quoted`."""

    parts: Tuple[Union[Lit, Param, Var, Subst], ...]


Segment = Union[Lit, Param, Var, Subst, Quoted]


@dataclass(frozen=True)
class Word:
    segments: Tuple[Segment, ...]

    @property
    def quoted(self) -> bool:
        return any(isinstance(s, Quoted) for s in self.segments)


@dataclass(frozen=True)
class SimpleCommand:
    words: Tuple[Word, ...]
    redirect: Optional[Word] = None


@dataclass(frozen=True)
class Arithmetic:
    """``(( name = expr ))``."""

    name: bytes
    expr: Expr


Command = Union[SimpleCommand, Arithmetic]

Script = Tuple[Command, ...]
