# Copyright (c) fixpoint authors. All rights reserved.
#
# This source code is licensed under the BSD license found in the
# LICENSE file in the root directory of this source tree.

# We're not responsible for pytest decorators
# mypy: disallow_untyped_decorators = False

"""
Collection of testing utilities for fixpoint: seeding and generators of
random kernel programs and shell scripts. Everything draws from the global
:mod:`random` state, so :func:`set_random_seed` makes a corpus reproducible.
"""

import random
from typing import List

import pytest

from fixpoint.kernel import (
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
    escape,
    serialize,
)
from fixpoint.theorems.constants import RESERVED_NAMES

# Acceptance-sized suites must finish well within a minute.
acceptance = pytest.mark.timeout(60)

# Literal pool: empty, decider alphabet, and the bytes escaping must handle.
LITERALS = [b"", b"0", b"1", b"xy", b'q"', b"\\", b"a\nb", b'"\\"']

SHELL_WORD_CHARS = "abcdefghijklmnopqrstuvwxyz0123456789!-"


def set_random_seed(seed: int) -> None:
    """Set random seed for reproducibility."""
    random.seed(seed)


def random_bytes(max_len: int = 16) -> bytes:
    """Arbitrary bytes, biased towards the ones that need escaping."""
    special = b'"\\\n;(){}'
    out = bytearray()
    for _ in range(random.randint(0, max_len)):
        if random.random() < 0.3:
            out.append(random.choice(special))
        else:
            out.append(random.randrange(256))
    return bytes(out)


def _register() -> Register:
    return random.choice([Register.a, Register.b, Register.c])


def _source(literal: bytes) -> Source:
    options: List[Source] = [Register.a, Register.b, Register.c, Literal(literal)]
    return random.choice(options)


def _random_stmt(names: List[bytes], depth: int) -> Stmt:
    kind = random.randrange(8 if depth > 0 else 7)
    if kind == 0:
        return Copy(_register(), _source(random_bytes(6)))
    if kind == 1:
        return Cat(_register(), _source(random_bytes(6)))
    if kind == 2:
        return CatEsc(_register(), _register())
    if kind == 3:
        return CatFn(_register(), _register())
    if kind == 4:
        return Call(random.choice(names + [b"missing_"]))
    if kind == 5:
        return Eval()
    if kind == 6:
        return Copy(Register.c, Literal(random.choice(LITERALS)))
    then = tuple(_random_stmt(names, depth - 1) for _ in range(random.randint(0, 3)))
    orelse = tuple(_random_stmt(names, depth - 1) for _ in range(random.randint(0, 3)))
    return IfEq(_register(), Literal(random_bytes(4)), then, orelse)


def random_program(max_defs: int = 3, max_stmts: int = 6, depth: int = 2) -> KernelProgram:
    """Any well-formed program; it need not terminate or call defined names only."""
    names = [f"f{i}_".encode("ascii") for i in range(random.randint(1, max_defs))]
    defs = [
        FunctionDef(name, tuple(_random_stmt(names, depth) for _ in range(random.randint(0, max_stmts))))
        for name in names
    ]
    return KernelProgram(tuple(defs))


def _binary_stmt(callees: List[bytes], depth: int) -> Stmt:
    """Statements of a terminating program: no eval, calls only go forward.

    Nothing is ever read from c except by ifeq and only c is appended to, so
    register contents grow at most linearly in the number of steps.
    """
    inputs: List[Register] = [Register.a, Register.b]
    src: Source = random.choice(inputs) if random.random() < 0.6 else Literal(random.choice(LITERALS))
    kinds = ["copy", "cat", "catesc", "catfn"] + (["call"] if callees else []) + (["ifeq"] if depth > 0 else [])
    kind = random.choice(kinds)
    if kind == "copy":
        return Copy(_register(), src)
    if kind == "cat":
        return Cat(Register.c, src)
    if kind == "catesc":
        return CatEsc(Register.c, random.choice(inputs))
    if kind == "catfn":
        return CatFn(Register.c, random.choice(inputs))
    if kind == "call":
        return Call(random.choice(callees))
    then = tuple(_binary_stmt(callees, depth - 1) for _ in range(random.randint(0, 2)))
    orelse = tuple(_binary_stmt(callees, depth - 1) for _ in range(random.randint(0, 2)))
    return IfEq(_register(), Literal(random.choice(LITERALS)), then, orelse)


def random_binary_program(max_defs: int = 3, max_stmts: int = 5) -> bytes:
    """Canonical text of a terminating binary program free of reserved names.

    About half the entries overwrite c first; the rest append to whatever c
    held when they were called.
    """
    count = random.randint(1, max_defs)
    names = [f"g{i}_".encode("ascii") for i in range(count)]
    assert not RESERVED_NAMES.intersection(names)
    defs = []
    for i, name in enumerate(names):
        callees = names[i + 1 :]
        body: List[Stmt] = [_binary_stmt(callees, 1) for _ in range(random.randint(0, max_stmts))]
        if i == 0 and random.random() < 0.5:
            first: Source = Literal(random.choice(LITERALS))
            if random.random() < 0.7:
                first = random.choice([Register.a, Register.b])
            body.insert(0, Copy(Register.c, first))
        defs.append(FunctionDef(name, tuple(body)))
    return serialize(KernelProgram(tuple(defs)))


def random_script_maker() -> bytes:
    """A unary, b-preserving program whose output on any input parses.

    Three shapes: a constant program, a program returning the input's text,
    and a branch choosing between two constant programs.
    """
    shape = random.randrange(3)
    if shape == 0:
        made = random_binary_program()
        return b'm_(){strcpy(c,"' + escape(made) + b'");}'
    if shape == 1:
        return b'm_(){strcpy(c,"t_(){strcpy(c,\\"");strcatq(c,a);strcat(c,"\\");}");}'
    left, right = random_binary_program(), random_binary_program()
    return (
        b'm_(){ifeq(a,""){strcpy(c,"'
        + escape(left)
        + b'");}else{strcpy(c,"'
        + escape(right)
        + b'");}}'
    )


def _shell_word() -> str:
    return "".join(random.choice(SHELL_WORD_CHARS) for _ in range(random.randint(1, 5)))


def random_shell_script() -> bytes:
    """A few lines reading ``$1`` and ``$2`` as file names or text.

    ``$1`` and ``$2`` must name files or be empty for ``cat`` to succeed.
    """
    fragments = [
        lambda: f"echo {_shell_word()} $1",
        lambda: f"echo $2 {_shell_word()}",
        lambda: 'echo "' + _shell_word() + ' $1 $2"',
        lambda: "cat $1",
        lambda: "cat $2",
        lambda: f"((  v = {random.randint(0, 9)}*{random.randint(0, 9)}+2**{random.randint(0, 9)} ));echo $v",
    ]
    lines = [random.choice(fragments)() for _ in range(random.randint(1, 3))]
    if random.random() < 0.3:
        lines.append(f"set {_shell_word()} $2;echo $1 $2")
    return ("\n".join(lines) + "\n").encode("ascii")


def random_shell_script_maker() -> bytes:
    """A script whose stdout is itself a runnable script."""
    word = _shell_word()
    return random.choice(
        [f"echo echo {word}\n", f"echo echo {word} \\$1\n", "echo cat $1\n", "echo echo $1\n"]
    ).encode("ascii")
