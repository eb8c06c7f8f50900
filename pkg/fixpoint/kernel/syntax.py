# Copyright (c) fixpoint authors. All rights reserved.
#
# This source code is licensed under the BSD license found in the
# LICENSE file in the root directory of this source tree.

"""Abstract syntax of the kernel language and its canonical serialization.

A kernel program is a sequence of function definitions; the first one is the
entry point. All program state lives in three string registers ``a``, ``b``
and ``c``. The canonical form of a program has no whitespace between tokens::

    id_(){strcpy(c,a);}
    s1_(){strcpy(c,a);strcpy(b,a);}

"""
from dataclasses import dataclass
from enum import Enum
import re
from typing import List, Tuple, Union

from .escape import escape

__all__ = [
    "Register",
    "Literal",
    "Copy",
    "Cat",
    "CatEsc",
    "CatFn",
    "Call",
    "Eval",
    "IfEq",
    "Stmt",
    "FunctionDef",
    "KernelProgram",
    "is_identifier",
    "serialize",
]

IDENTIFIER = re.compile(rb"[a-z][a-z0-9]*_")

STRCPY = b"strcpy"
STRCAT = b"strcat"
STRCATQ = b"strcatq"
STRCATFN = b"strcatfn"
EVAL = b"eval"
IFEQ = b"ifeq"
ELSE = b"else"

KEYWORDS = (STRCPY, STRCAT, STRCATQ, STRCATFN, EVAL, IFEQ, ELSE)


def is_identifier(name: bytes) -> bool:
    return IDENTIFIER.fullmatch(name) is not None


class Register(str, Enum):
    a = "a"
    b = "b"
    c = "c"

    @property
    def token(self) -> bytes:
        return self.value.encode("ascii")


@dataclass(frozen=True)
class Literal:
    """A quoted string. ``value`` is the unescaped form."""

    value: bytes

    @property
    def token(self) -> bytes:
        return b'"' + escape(self.value) + b'"'


Source = Union[Register, Literal]


@dataclass(frozen=True)
class Copy:
    """``strcpy(dst,src);`` overwrites dst."""

    dst: Register
    src: Source


@dataclass(frozen=True)
class Cat:
    """``strcat(dst,src);`` appends src to dst."""

    dst: Register
    src: Source


@dataclass(frozen=True)
class CatEsc:
    """``strcatq(dst,src);`` appends the escaped content of src to dst."""

    dst: Register
    src: Register


@dataclass(frozen=True)
class CatFn:
    """``strcatfn(dst,src);`` appends the function name that src's text starts with."""

    dst: Register
    src: Register


@dataclass(frozen=True)
class Call:
    name: bytes


@dataclass(frozen=True)
class Eval:
    """``eval();`` applies the program held in a to the input held in b."""


@dataclass(frozen=True)
class IfEq:
    reg: Register
    lit: Literal
    then: Tuple["Stmt", ...]
    orelse: Tuple["Stmt", ...]


Stmt = Union[Copy, Cat, CatEsc, CatFn, Call, Eval, IfEq]


@dataclass(frozen=True)
class FunctionDef:
    name: bytes
    body: Tuple[Stmt, ...]

    def __post_init__(self) -> None:
        if not is_identifier(self.name):
            raise ValueError(f"not an identifier: {self.name!r}")


@dataclass(frozen=True)
class KernelProgram:
    defs: Tuple[FunctionDef, ...]

    def __post_init__(self) -> None:
        if len(self.defs) == 0:
            raise ValueError("a program needs at least one definition")
        names = self.names
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate definition names in {names!r}")

    @property
    def entry(self) -> FunctionDef:
        return self.defs[0]

    @property
    def names(self) -> List[bytes]:
        return [d.name for d in self.defs]

    def lookup(self, name: bytes) -> FunctionDef:
        for d in self.defs:
            if d.name == name:
                return d
        raise KeyError(name)


def _serialize_stmt(stmt: Stmt, out: List[bytes]) -> None:
    if isinstance(stmt, Copy):
        out += [STRCPY, b"(", stmt.dst.token, b",", stmt.src.token, b");"]
    elif isinstance(stmt, Cat):
        out += [STRCAT, b"(", stmt.dst.token, b",", stmt.src.token, b");"]
    elif isinstance(stmt, CatEsc):
        out += [STRCATQ, b"(", stmt.dst.token, b",", stmt.src.token, b");"]
    elif isinstance(stmt, CatFn):
        out += [STRCATFN, b"(", stmt.dst.token, b",", stmt.src.token, b");"]
    elif isinstance(stmt, Call):
        out += [stmt.name, b"();"]
    elif isinstance(stmt, Eval):
        out.append(EVAL + b"();")
    elif isinstance(stmt, IfEq):
        out += [IFEQ, b"(", stmt.reg.token, b",", stmt.lit.token, b"){"]
        for s in stmt.then:
            _serialize_stmt(s, out)
        out.append(b"}" + ELSE + b"{")
        for s in stmt.orelse:
            _serialize_stmt(s, out)
        out.append(b"}")
    else:
        raise TypeError(f"not a kernel statement: {stmt!r}")


def serialize(program: KernelProgram) -> bytes:
    """Returns the canonical text of ``program``."""
    out: List[bytes] = []
    for d in program.defs:
        out += [d.name, b"(){"]
        for stmt in d.body:
            _serialize_stmt(stmt, out)
        out.append(b"}")
    return b"".join(out)
