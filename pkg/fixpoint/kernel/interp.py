# Copyright (c) fixpoint authors. All rights reserved.
#
# This source code is licensed under the BSD license found in the
# LICENSE file in the root directory of this source tree.

"""Fuel-bounded evaluator of kernel programs.

``run(x, y, z)`` computes the function computed by ``x`` on ``(y, z)``: the
registers start as ``a=y``, ``b=z``, ``c=""``, the first definition runs, and
the final ``c`` is the result. The same evaluator serves ``eval();``, so it is
also the universal function of the language.

Calls, conditionals and nested evaluation are kept on an explicit stack; the
host recursion depth never depends on the object program.
"""
from dataclasses import dataclass
import logging
from typing import Dict, List, Optional, Sequence, Tuple, Union

from ..config import get_fuel
from ..errors import OutcomeError, ParseError
from ..outcome import Fault, FaultKind, Fuel, FuelExhausted, Halted, Outcome
from .escape import escape
from .parser import header_prefix, parse
from .syntax import Call, Cat, CatEsc, CatFn, Copy, Eval, FunctionDef, IfEq, KernelProgram, Register, Source, Stmt

__all__ = ["RegisterFile", "run", "check_b_preserving", "Violation", "BPreservation"]

Program = Union[bytes, KernelProgram]


@dataclass
class RegisterFile:
    """The three string registers; nothing else in a kernel run is mutable."""

    a: bytes = b""
    b: bytes = b""
    c: bytes = b""

    def get(self, reg: Register) -> bytes:
        if reg is Register.a:
            return self.a
        if reg is Register.b:
            return self.b
        return self.c

    def set(self, reg: Register, value: bytes) -> None:
        if reg is Register.a:
            self.a = value
        elif reg is Register.b:
            self.b = value
        else:
            self.c = value


class _Frame:
    __slots__ = ("body", "pc")

    def __init__(self, body: Tuple[Stmt, ...]) -> None:
        self.body = body
        self.pc = 0


class _Activation:
    """One program applied to one register file: the entry run, or an ``eval();``."""

    __slots__ = ("defs", "registers", "frames")

    def __init__(self, program: KernelProgram, registers: RegisterFile) -> None:
        self.defs: Dict[bytes, FunctionDef] = {d.name: d for d in program.defs}
        self.registers = registers
        self.frames: List[_Frame] = []
        self.enter(program.entry.body)

    def enter(self, body: Tuple[Stmt, ...]) -> None:
        # A finished frame has nothing left to return to.
        if self.frames and self.frames[-1].pc >= len(self.frames[-1].body):
            self.frames.pop()
        self.frames.append(_Frame(body))


def _read(src: Source, registers: RegisterFile) -> bytes:
    if isinstance(src, Register):
        return registers.get(src)
    return src.value


def _execute(program: KernelProgram, registers: RegisterFile, fuel: Fuel) -> Outcome:
    stack = [_Activation(program, registers)]

    while True:
        act = stack[-1]
        frames = act.frames

        if not frames:
            stack.pop()
            if not stack:
                return Halted(act.registers.c, registers=act.registers)
            # Return from eval(): only the caller's c changes.
            stack[-1].registers.c = act.registers.c
            continue

        frame = frames[-1]
        if frame.pc >= len(frame.body):
            frames.pop()
            continue

        stmt = frame.body[frame.pc]
        frame.pc += 1
        if not fuel.consume():
            return FuelExhausted()

        regs = act.registers
        if isinstance(stmt, Copy):
            regs.set(stmt.dst, _read(stmt.src, regs))
        elif isinstance(stmt, Cat):
            regs.set(stmt.dst, regs.get(stmt.dst) + _read(stmt.src, regs))
        elif isinstance(stmt, CatEsc):
            regs.set(stmt.dst, regs.get(stmt.dst) + escape(regs.get(stmt.src)))
        elif isinstance(stmt, CatFn):
            regs.set(stmt.dst, regs.get(stmt.dst) + header_prefix(regs.get(stmt.src)))
        elif isinstance(stmt, Call):
            target = act.defs.get(stmt.name)
            if target is None:
                return Fault(FaultKind.UNKNOWN_CALL, stmt.name.decode("latin-1"))
            act.enter(target.body)
        elif isinstance(stmt, IfEq):
            act.enter(stmt.then if regs.get(stmt.reg) == stmt.lit.value else stmt.orelse)
        elif isinstance(stmt, Eval):
            try:
                inner = parse(regs.a)
            except ParseError as e:
                return Fault(FaultKind.PARSE_INSIDE_EVAL, str(e))
            stack.append(_Activation(inner, RegisterFile(a=regs.b)))
        else:
            raise TypeError(f"not a kernel statement: {stmt!r}")


def run(
    program: Program, a_in: bytes = b"", b_in: bytes = b"", fuel: Union[None, int, Fuel] = None,
) -> Outcome:
    """Runs ``program`` on ``a=a_in``, ``b=b_in``.

    Args:
        program (bytes or KernelProgram):
            source text (must parse) or an already parsed program
        a_in, b_in (bytes):
            initial content of registers a and b; c always starts empty
        fuel (int or Fuel):
            statement budget; a :class:`Fuel` instance is shared and drawn
            down, an int starts a fresh budget (default: :func:`get_fuel`)

    Returns:
        :class:`Halted` with the final c, :class:`FuelExhausted`, or :class:`Fault`
    """
    if isinstance(program, bytes):
        program = parse(program)
    if not isinstance(fuel, Fuel):
        fuel = Fuel(get_fuel(fuel))

    spent_before = fuel.spent
    outcome = _execute(program, RegisterFile(a_in, b_in, b""), fuel)
    logging.debug(
        "run %s: %s after %d statements",
        program.entry.name.decode("ascii"),
        type(outcome).__name__,
        fuel.spent - spent_before,
    )
    return outcome


@dataclass(frozen=True)
class Violation:
    sample: Tuple[bytes, bytes]
    before: bytes
    after: bytes


@dataclass(frozen=True)
class BPreservation:
    """Result of :func:`check_b_preserving`. Sampling can reject a program but
    never prove it b-preserving.
    """

    violation: Optional[Violation]
    # Samples that ran out of fuel and say nothing either way.
    skipped: Tuple[Tuple[bytes, bytes], ...] = ()

    @property
    def ok(self) -> bool:
        return self.violation is None

    @property
    def warned(self) -> bool:
        return len(self.skipped) > 0


def check_b_preserving(
    program: Program, samples: Sequence[Tuple[bytes, bytes]], fuel: Optional[int] = None
) -> BPreservation:
    """Reports the first sample ``(a, b)`` after which register b no longer holds ``b``."""
    if isinstance(program, bytes):
        program = parse(program)
    budget = get_fuel(fuel)

    skipped: List[Tuple[bytes, bytes]] = []
    for a_in, b_in in samples:
        outcome = run(program, a_in, b_in, budget)
        if isinstance(outcome, FuelExhausted):
            logging.warning(f"b-preservation sample a={a_in!r} skipped: fuel exhausted")
            skipped.append((a_in, b_in))
            continue
        if isinstance(outcome, Fault):
            raise OutcomeError("fault while checking b-preservation", outcome)
        assert outcome.registers is not None
        if outcome.registers.b != b_in:
            return BPreservation(Violation((a_in, b_in), b_in, outcome.registers.b), tuple(skipped))
    return BPreservation(None, tuple(skipped))
