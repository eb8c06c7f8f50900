# Copyright (c) fixpoint authors. All rights reserved.
#
# This source code is licensed under the BSD license found in the
# LICENSE file in the root directory of this source tree.

"""The kernel language: three string registers and a handful of statements."""
from .escape import escape, unescape
from .interp import BPreservation, RegisterFile, Violation, check_b_preserving, run
from .parser import canonicalize, fn_name, header_prefix, parse
from .syntax import (
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

__all__ = [
    "escape",
    "unescape",
    "parse",
    "canonicalize",
    "serialize",
    "fn_name",
    "header_prefix",
    "run",
    "check_b_preserving",
    "RegisterFile",
    "Violation",
    "BPreservation",
    "KernelProgram",
    "FunctionDef",
    "Stmt",
    "Copy",
    "Cat",
    "CatEsc",
    "CatFn",
    "Call",
    "Eval",
    "IfEq",
    "Literal",
    "Register",
    "Source",
    "is_identifier",
]
