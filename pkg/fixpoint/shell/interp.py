# Copyright (c) fixpoint authors. All rights reserved.
#
# This source code is licensed under the BSD license found in the
# LICENSE file in the root directory of this source tree.

"""Fuel-bounded interpreter for mini-shell scripts.

Builtins are ``echo``, ``cat``, ``set``, ``chmod 755`` and ``(( name = expr ))``;
any other command word names a script in the workspace. Every executed
command costs one unit of fuel, script invocations included.

Script invocations and command substitutions are driven from an explicit
stack of generators, so nesting depth is limited by fuel only.
"""
from dataclasses import dataclass
import logging
from typing import Generator, List, Optional, Sequence, Union

from ..config import get_fuel
from ..errors import FileNotFound, PermissionDenied, ShellError, ShellFuelExhausted, ShellParseError
from ..outcome import Fault, FaultKind, Fuel, FuelExhausted, Halted, Outcome
from .arith import evaluate
from .parser import shell_parse
from .syntax import Arithmetic, Lit, Param, Quoted, Script, Segment, Subst, Var, Word
from .workspace import Frame, ShellWorkspace, check_name

__all__ = ["ShellResult", "shell_run", "expand"]


@dataclass(frozen=True)
class _Exec:
    """Request to the driver: run ``script`` in ``frame``, printing into ``out``."""

    script: Script
    frame: Frame
    out: bytearray


_Steps = Generator[_Exec, None, None]


@dataclass(frozen=True)
class ShellResult:
    stdout: bytes
    workspace: ShellWorkspace
    status: int = 0
    error: Optional[ShellError] = None

    @property
    def outcome(self) -> Outcome:
        """The run seen as a computation whose value is what it printed."""
        if self.error is None:
            return Halted(self.stdout)
        if isinstance(self.error, ShellFuelExhausted):
            return FuelExhausted()
        return Fault(FaultKind.SHELL_ERROR, f"status {self.status}: {self.error}")


class _Shell:
    def __init__(self, ws: ShellWorkspace, fuel: Fuel) -> None:
        self.ws = ws
        self.fuel = fuel

    def load(self, name: bytes) -> Script:
        if name not in self.ws.files:
            raise FileNotFound(name)
        if not self.ws.is_executable(name):
            raise PermissionDenied(name)
        return shell_parse(self.ws.read(name))

    def drive(self, root: _Steps) -> None:
        stack = [root]
        error: Optional[ShellError] = None
        while stack:
            top = stack[-1]
            try:
                if error is not None:
                    pending, error = error, None
                    request = top.throw(pending)
                else:
                    request = top.send(None)
            except StopIteration:
                stack.pop()
                continue
            except ShellError as e:
                stack.pop()
                error = e
                continue
            stack.append(self.commands(request.script, request.frame, request.out))
        if error is not None:
            raise error

    def commands(self, script: Script, frame: Frame, out: bytearray) -> _Steps:
        for command in script:
            if not self.fuel.consume():
                raise ShellFuelExhausted(f"fuel exhausted after {self.fuel.spent} commands")

            if isinstance(command, Arithmetic):
                value = evaluate(command.expr, self.ws.variables)
                self.ws.variables[command.name] = str(value).encode("ascii")
                continue

            argv: List[bytes] = []
            for word in command.words:
                value_b = yield from self.expand(word, frame)
                if value_b or word.quoted:
                    argv.append(value_b)

            target: Optional[bytes] = None
            if command.redirect is not None:
                target = yield from self.expand(command.redirect, frame)
                check_name(target)

            sink = bytearray() if target is not None else out
            if argv:
                yield from self.dispatch(argv, frame, sink, bare=len(command.words) == 1)
            if target is not None:
                self.ws.write(target, bytes(sink))

    def dispatch(self, argv: List[bytes], frame: Frame, out: bytearray, bare: bool = False) -> _Steps:
        name, args = argv[0], argv[1:]
        if name == b"echo":
            out += b" ".join(args) + b"\n"
        elif name == b"cat":
            for arg in args:
                out += self.ws.read(arg)
        elif name == b"set":
            frame.positional[:] = args
        elif name == b"chmod":
            if len(args) < 2 or args[0] != b"755":
                raise ShellParseError(f"chmod: only 'chmod 755 FILE...' is supported, got {b' '.join(args)!r}")
            for arg in args[1:]:
                self.ws.chmod(arg)
        else:
            script = self.load(name)
            # A script named with no argument words runs on the caller's parameters.
            child = frame if bare else Frame(list(args), name)
            yield _Exec(script, child, out)

    def expand(self, word: Word, frame: Frame) -> Generator[_Exec, None, bytes]:
        parts: List[bytes] = []
        for segment in word.segments:
            if isinstance(segment, Quoted):
                for inner in segment.parts:
                    parts.append((yield from self.segment(inner, frame)))
            else:
                parts.append((yield from self.segment(segment, frame)))
        return b"".join(parts)

    def segment(self, segment: Segment, frame: Frame) -> Generator[_Exec, None, bytes]:
        if isinstance(segment, Lit):
            return segment.text
        if isinstance(segment, Param):
            return frame.param(segment.index)
        if isinstance(segment, Var):
            return self.ws.variables.get(segment.name, b"")
        if isinstance(segment, Subst):
            captured = bytearray()
            yield _Exec(segment.script, frame.copy(), captured)
            return bytes(captured).rstrip(b"\n")
        raise TypeError(f"not a shell word segment: {segment!r}")


def _as_fuel(fuel: Union[None, int, Fuel]) -> Fuel:
    return fuel if isinstance(fuel, Fuel) else Fuel(get_fuel(fuel))


def shell_run(
    ws: ShellWorkspace,
    name: bytes,
    args: Sequence[bytes] = (),
    fuel: Union[None, int, Fuel] = None,
    *,
    check: bool = True,
) -> ShellResult:
    """Runs script ``name`` with positional parameters ``args``.

    ``ws`` is not modified; the returned workspace carries the files the run
    created or changed, a fresh variables table and the captured stdout.

    Args:
        ws (ShellWorkspace):
            workspace holding the script and everything it reads
        name (bytes):
            script to invoke; must exist and be executable
        args (list of bytes):
            ``$1``, ``$2``, ...
        fuel (int or Fuel):
            command budget (default: :func:`get_fuel`)
        check (bool):
            raise :exc:`ShellError` on failure (default), or report it in
            :attr:`ShellResult.status` and :attr:`ShellResult.error`
    """
    work = ws.copy()
    work.variables = {}
    work.stdout = b""
    out = bytearray()
    budget = _as_fuel(fuel)
    shell = _Shell(work, budget)

    status = 0
    error: Optional[ShellError] = None
    try:
        shell.drive(shell.commands(shell.load(name), Frame(list(args), name), out))
    except ShellError as e:
        if check:
            raise
        status, error = e.status, e

    work.stdout = bytes(out)
    logging.debug(f"shell_run {name!r}: status {status} after {budget.spent} commands")
    return ShellResult(work.stdout, work, status, error)


def expand(word: Word, ws: ShellWorkspace, frame: Frame, fuel: Union[None, int, Fuel] = None) -> bytes:
    """Expands one word as a command would see it. Substitutions run against
    ``ws`` and may change its files.
    """
    shell = _Shell(ws, _as_fuel(fuel))
    result: List[bytes] = []

    def root() -> _Steps:
        result.append((yield from shell.expand(word, frame)))

    shell.drive(root())
    return result[0]
