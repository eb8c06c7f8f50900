# Copyright (c) fixpoint authors. All rights reserved.
#
# This source code is licensed under the BSD license found in the
# LICENSE file in the root directory of this source tree.

"""Command-line surface.

::

    fixpoint kernel run id.kc --a y            # prints y
    fixpoint kernel quine -o q.kc
    fixpoint kernel verify fix x.kc --samples samples.txt
    fixpoint kernel rice --decider d.kc --in-class s.kc --out-class t.kc
    fixpoint shell init ws
    fixpoint shell demo ws kcat2

Exit status: 0 ok, 1 verification failed, 2 bad input, 3 fuel exhausted,
4 reserved-name collision or calling-convention violation.
"""
import argparse
import difflib
from enum import Enum
import logging
import os
import sys
from typing import Callable, Dict, List, Optional

from .config import get_fuel
from .errors import (
    BConventionViolation,
    DeciderNotBinaryOutput,
    FixpointError,
    NameCollision,
    OutcomeError,
    ParseError,
    ShellError,
    ShellFuelExhausted,
)
from .kernel import run
from .outcome import FuelExhausted, Halted
from .shell import (
    DEMO_TRANSCRIPTS,
    ShellWorkspace,
    install_prelude,
    load_workspace,
    run_demo,
    save_workspace,
    shell_run,
    uk_apply,
    ur_apply,
    verify_uniform_fix,
    verify_uniform_rogers,
)
from .theorems import (
    AllAgree,
    Disagree,
    EvidenceReport,
    ds_transform,
    kleene_fix,
    quine,
    rice_witness,
    rogers_fix,
    verify_diagonal,
    verify_kleene,
    verify_rogers,
)

__all__ = ["ExitStatus", "main"]


class ExitStatus(int, Enum):
    OK = 0
    VERIFICATION_FAILED = 1
    BAD_INPUT = 2
    FUEL_EXHAUSTED = 3
    CONVENTION = 4


def _out(data: bytes) -> None:
    sys.stdout.buffer.write(data)
    sys.stdout.buffer.flush()


def _line(text: str) -> None:
    _out(text.encode("utf-8", "backslashreplace") + b"\n")


def _err(text: str) -> None:
    sys.stderr.write(text + "\n")
    sys.stderr.flush()


def _read(path: str) -> bytes:
    with open(path, "rb") as f:
        return f.read()


def _write(path: Optional[str], data: bytes) -> None:
    if path is None:
        _out(data)
        return
    with open(path, "wb") as f:
        f.write(data)


def read_samples(path: str) -> List[bytes]:
    """One sample per line, taken as raw bytes; an empty line is the empty sample."""
    data = _read(path)
    lines = data.split(b"\n")
    if data.endswith(b"\n"):
        lines.pop()
    if not lines:
        raise ValueError(f"{path}: no samples")
    return lines


def _samples(args: argparse.Namespace) -> Optional[List[bytes]]:
    return read_samples(args.samples) if getattr(args, "samples", None) else None


def _report(report: EvidenceReport) -> ExitStatus:
    for row in report.table():
        _line(row)
    _line(report.summary())
    if isinstance(report.verdict, AllAgree):
        return ExitStatus.OK
    if isinstance(report.verdict, Disagree):
        return ExitStatus.VERIFICATION_FAILED
    return ExitStatus.FUEL_EXHAUSTED


# kernel


def _kernel_run(args: argparse.Namespace) -> ExitStatus:
    outcome = run(_read(args.file), os.fsencode(args.a), os.fsencode(args.b), args.fuel)
    if isinstance(outcome, Halted):
        _out(outcome.value)
        return ExitStatus.OK
    _err(f"{args.file}: {outcome}")
    return ExitStatus.FUEL_EXHAUSTED if isinstance(outcome, FuelExhausted) else ExitStatus.BAD_INPUT


def _kernel_transform(args: argparse.Namespace) -> ExitStatus:
    source = _read(args.file)
    if args.command == "ds":
        result = ds_transform(source)
    elif args.command == "fix":
        result = kleene_fix(source)
    else:
        result = rogers_fix(source, _samples(args), args.fuel)
    _write(args.output, result)
    return ExitStatus.OK


def _kernel_quine(args: argparse.Namespace) -> ExitStatus:
    _write(args.output, quine())
    return ExitStatus.OK


def _kernel_rice(args: argparse.Namespace) -> ExitStatus:
    report = rice_witness(
        _read(args.decider),
        _read(args.in_class),
        _read(args.out_class),
        _samples(args),
        args.fuel,
        workers=args.workers,
    )
    for row in report.describe():
        _line(row)
    _line(report.summary())
    return ExitStatus.OK if report.contradiction else ExitStatus.VERIFICATION_FAILED


_VERIFIERS: Dict[str, Callable[..., EvidenceReport]] = {
    "ds": verify_diagonal,
    "fix": verify_kleene,
    "rogers": verify_rogers,
}


def _kernel_verify(args: argparse.Namespace) -> ExitStatus:
    verifier = _VERIFIERS[args.theorem]
    return _report(verifier(_read(args.file), _samples(args), args.fuel, workers=args.workers))


# shell


def _shell_init(args: argparse.Namespace) -> ExitStatus:
    save_workspace(install_prelude(ShellWorkspace()), args.dir)
    return ExitStatus.OK


def _shell_run(args: argparse.Namespace) -> ExitStatus:
    ws = load_workspace(args.dir)
    result = shell_run(ws, os.fsencode(args.script), [os.fsencode(a) for a in args.args], args.fuel, check=False)
    _out(result.stdout)
    save_workspace(result.workspace, args.dir)
    if result.error is not None:
        raise result.error
    return ExitStatus.OK


def _shell_build(args: argparse.Namespace) -> ExitStatus:
    ws = load_workspace(args.dir)
    x = os.fsencode(args.x)
    if args.command == "uk":
        ws, built = uk_apply(ws, x, args.fuel), [b"k" + x]
    else:
        ws, built = ur_apply(ws, x, args.fuel), [b"r" + x, b"kr" + x]
    save_workspace(ws, args.dir)
    for name in built:
        _line(os.fsdecode(name))
    return ExitStatus.OK


def _shell_demo(args: argparse.Namespace) -> ExitStatus:
    golden = DEMO_TRANSCRIPTS[args.name]
    expected = golden.stdout
    result = run_demo(load_workspace(args.dir), args.name, args.fuel)
    _out(result.stdout)

    ok = result.stdout == expected
    if not ok:
        diff = difflib.unified_diff(
            expected.decode("latin-1").splitlines(True),
            result.stdout.decode("latin-1").splitlines(True),
            "golden",
            "stdout",
        )
        _err("".join(diff))
    script = golden.file
    if script is not None:
        built = result.workspace.files.get(script)
        if built is None or built.content != golden.content:
            _err(f"{os.fsdecode(script)}: content differs from the golden script")
            ok = False
    return ExitStatus.OK if ok else ExitStatus.VERIFICATION_FAILED


def _shell_verify(args: argparse.Namespace) -> ExitStatus:
    verifier = verify_uniform_rogers if args.rogers else verify_uniform_fix
    ws = load_workspace(args.dir)
    return _report(verifier(ws, os.fsencode(args.x), _samples(args), args.fuel, workers=args.workers))


def _fuel(value: str) -> int:
    fuel = int(value)
    if fuel < 0:
        raise argparse.ArgumentTypeError(f"fuel must be a non-negative integer ({fuel} < 0)")
    return fuel


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--fuel", type=_fuel, default=None, help="Step budget per run (default: $FIXPOINT_FUEL or 100000)"
    )
    common.add_argument("--workers", type=int, default=1, help="Samples verified side by side")
    common.add_argument("--debug", action="store_true", default=False, help="Display additional debug information")

    parser = argparse.ArgumentParser(prog="fixpoint", description="Kleene, Rogers and Rice constructions, runnable.")
    languages = parser.add_subparsers(dest="language", required=True)

    kernel = languages.add_parser("kernel", help="Kernel-language programs and theorems").add_subparsers(
        dest="command", required=True
    )

    p = kernel.add_parser("run", parents=[common], help="Run a program and print register c")
    p.add_argument("file")
    p.add_argument("--a", default="", help="Initial content of register a")
    p.add_argument("--b", default="", help="Initial content of register b")
    p.set_defaults(handler=_kernel_run)

    for name, description in (
        ("ds", "Diagonal substitution of a binary program"),
        ("fix", "Kleene fixed point of a binary program"),
        ("rogers", "Rogers fixed point of a b-preserving script-maker"),
    ):
        p = kernel.add_parser(name, parents=[common], help=description)
        p.add_argument("file")
        p.add_argument("-o", "--output", default=None, help="Output file (default: stdout)")
        p.add_argument("--samples", default=None, help="Sample file for the b-preservation check")
        p.set_defaults(handler=_kernel_transform)

    p = kernel.add_parser("quine", parents=[common], help="Write a program that returns its own text")
    p.add_argument("-o", "--output", default=None, help="Output file (default: stdout)")
    p.set_defaults(handler=_kernel_quine)

    p = kernel.add_parser("rice", parents=[common], help="Build the witness that refutes a decider")
    p.add_argument("--decider", required=True)
    p.add_argument("--in-class", required=True, help="A program whose function is in the class")
    p.add_argument("--out-class", required=True, help="A program whose function is not")
    p.add_argument("--samples", default=None)
    p.set_defaults(handler=_kernel_rice)

    p = kernel.add_parser("verify", parents=[common], help="Check a theorem's equation on samples")
    p.add_argument("theorem", choices=sorted(_VERIFIERS))
    p.add_argument("file")
    p.add_argument("--samples", default=None)
    p.set_defaults(handler=_kernel_verify)

    shell = languages.add_parser("shell", help="Mini-shell workspaces and the uniform theorems").add_subparsers(
        dest="command", required=True
    )

    p = shell.add_parser("init", parents=[common], help="Create a workspace holding the prelude")
    p.add_argument("dir")
    p.set_defaults(handler=_shell_init)

    p = shell.add_parser("run", parents=[common], help="Run a script and print its stdout")
    p.add_argument("dir")
    p.add_argument("script")
    p.add_argument("args", nargs="*")
    p.set_defaults(handler=_shell_run)

    for name, description in (("uk", "Build kX from X"), ("ur", "Build rX and krX from a script-maker X")):
        p = shell.add_parser(name, parents=[common], help=description)
        p.add_argument("dir")
        p.add_argument("x")
        p.set_defaults(handler=_shell_build)

    p = shell.add_parser("demo", parents=[common], help="Replay a transcript and compare it with the golden one")
    p.add_argument("dir")
    p.add_argument("name", choices=sorted(DEMO_TRANSCRIPTS))
    p.set_defaults(handler=_shell_demo)

    p = shell.add_parser("verify", parents=[common], help="Compare kX z with X kX z (or krX z with the made script)")
    p.add_argument("dir")
    p.add_argument("x")
    p.add_argument("--samples", default=None)
    p.add_argument("--rogers", action="store_true", default=False, help="Check the uniform Rogers equation")
    p.set_defaults(handler=_shell_verify)

    return parser


def _status_of(error: Exception) -> ExitStatus:
    if isinstance(error, (NameCollision, BConventionViolation, DeciderNotBinaryOutput)):
        return ExitStatus.CONVENTION
    if isinstance(error, ShellFuelExhausted):
        return ExitStatus.FUEL_EXHAUSTED
    if isinstance(error, OutcomeError):
        if isinstance(error.outcome, FuelExhausted):
            return ExitStatus.FUEL_EXHAUSTED
        return ExitStatus.BAD_INPUT
    if isinstance(error, (ParseError, ShellError, OSError, ValueError)):
        return ExitStatus.BAD_INPUT
    return ExitStatus.VERIFICATION_FAILED


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.debug else logging.WARNING)
    args.fuel = get_fuel(args.fuel)
    logging.debug(f"arguments: {args}")

    try:
        status: ExitStatus = args.handler(args)
    except (FixpointError, OSError, ValueError) as e:
        status = _status_of(e)
        _err(f"fixpoint: {e}")
    return int(status)
