# Copyright (c) fixpoint authors. All rights reserved.
#
# This source code is licensed under the BSD license found in the
# LICENSE file in the root directory of this source tree.

"""Uniform fixed points in the mini-shell, their demos and their verifiers.

Two shell invocations are equal when they print the same bytes; files they
create or change are not compared.
"""
from dataclasses import dataclass
import logging
from typing import Callable, Dict, Optional, Sequence

from ..config import default_shell_samples
from ..errors import OutcomeError
from ..outcome import Outcome
from ..theorems.evidence import EvidenceReport, collect_evidence
from .interp import ShellResult, shell_run
from .parser import shell_parse
from .workspace import ShellWorkspace

__all__ = [
    "uk_apply",
    "ur_apply",
    "demo_self_plus",
    "run_demo",
    "DEMOS",
    "DEMO_TRANSCRIPTS",
    "DemoTranscript",
    "verify_uniform_fix",
    "verify_uniform_rogers",
]


def uk_apply(ws: ShellWorkspace, x: bytes, fuel: Optional[int] = None) -> ShellWorkspace:
    """Runs ``uk x``; the result holds the executable script ``kx``::

        kcat2() = set kcat2 $1;cat $1 $2

    """
    return shell_run(ws, b"uk", [x], fuel).workspace


def ur_apply(ws: ShellWorkspace, x: bytes, fuel: Optional[int] = None) -> ShellWorkspace:
    """Runs ``ur x``; the result holds ``rx`` and the executable ``krx``."""
    return shell_run(ws, b"ur", [x], fuel).workspace


def _demo_kcat2(ws: ShellWorkspace, fuel: Optional[int]) -> ShellResult:
    return shell_run(uk_apply(ws, b"cat2", fuel), b"kcat2", [b"id"], fuel)


def _demo_kself(ws: ShellWorkspace, fuel: Optional[int]) -> ShellResult:
    return shell_run(uk_apply(ws, b"self", fuel), b"kself", [], fuel)


def _demo_self_plus(ws: ShellWorkspace, fuel: Optional[int]) -> ShellResult:
    return shell_run(uk_apply(ws, b"self_plus", fuel), b"kself_plus", [], fuel)


def _demo_eecho(ws: ShellWorkspace, fuel: Optional[int]) -> ShellResult:
    return shell_run(ws, b"eecho", [], fuel)


def _demo_cat2idcat2(ws: ShellWorkspace, fuel: Optional[int]) -> ShellResult:
    return shell_run(ws, b"cat2idcat2", [], fuel)


DEMOS: Dict[str, Callable[[ShellWorkspace, Optional[int]], ShellResult]] = {
    "kcat2": _demo_kcat2,
    "kself": _demo_kself,
    "self_plus": _demo_self_plus,
    "eecho": _demo_eecho,
    "cat2idcat2": _demo_cat2idcat2,
}


@dataclass(frozen=True)
class DemoTranscript:
    """What a demo prints and, when it builds a script, that script's content."""

    stdout: bytes
    file: Optional[bytes] = None
    content: Optional[bytes] = None


DEMO_TRANSCRIPTS: Dict[str, DemoTranscript] = {
    "kcat2": DemoTranscript(b"set kcat2 $1;cat $1 $2\necho $1\n", b"kcat2", b"set kcat2 $1;cat $1 $2\n"),
    "kself": DemoTranscript(b"set kself $1;cat $1\n", b"kself", b"set kself $1;cat $1\n"),
    "self_plus": DemoTranscript(
        b"set kself_plus $1;cat $1;((  a = 9**9 ));echo $a\n387420489\n",
        b"kself_plus",
        b"set kself_plus $1;cat $1;((  a = 9**9 ));echo $a\n",
    ),
    "eecho": DemoTranscript(b"hi!\n", b"hi", b"echo hi!\n"),
    "cat2idcat2": DemoTranscript(b"echo $1\ncat $1 $2\n"),
}


def run_demo(ws: ShellWorkspace, name: str, fuel: Optional[int] = None) -> ShellResult:
    """Replays one of the :data:`DEMOS` on a workspace with the prelude installed."""
    if name not in DEMOS:
        raise ValueError(f"unknown demo {name!r}, expected one of {sorted(DEMOS)}")
    return DEMOS[name](ws, fuel)


def demo_self_plus(ws: ShellWorkspace, fuel: Optional[int] = None) -> bytes:
    """stdout of ``kself_plus``: its own source line, then ``387420489``."""
    return _demo_self_plus(ws, fuel).stdout


def verify_uniform_fix(
    ws: ShellWorkspace,
    x: bytes,
    samples: Optional[Sequence[bytes]] = None,
    fuel: Optional[int] = None,
    *,
    workers: int = 1,
) -> EvidenceReport:
    """Compares ``kx z`` with ``x kx z`` for every sample z."""
    ws = uk_apply(ws, x, fuel)
    kx = b"k" + x

    def left(z: bytes) -> Outcome:
        return shell_run(ws, kx, [z], fuel, check=False).outcome

    def right(z: bytes) -> Outcome:
        return shell_run(ws, x, [kx, z], fuel, check=False).outcome

    report = collect_evidence(default_shell_samples(x) if samples is None else samples, left, right, workers=workers)
    logging.info(f"uniform fix of {x!r}: {report.summary()}")
    return report


def verify_uniform_rogers(
    ws: ShellWorkspace,
    x: bytes,
    samples: Optional[Sequence[bytes]] = None,
    fuel: Optional[int] = None,
    *,
    workers: int = 1,
) -> EvidenceReport:
    """Compares ``krx z`` with the script printed by ``x krx``, run on z.

    The printed script is installed as ``x_``, executable, ending in a newline.
    """
    ws = ur_apply(ws, x, fuel)
    krx = b"kr" + x

    made = shell_run(ws, x, [krx], fuel, check=False)
    if made.error is not None:
        raise OutcomeError("script-maker failed on its fixed point", made.outcome)
    script = made.stdout if made.stdout.endswith(b"\n") else made.stdout + b"\n"
    shell_parse(script)

    emitted = x + b"_"
    built = ws.copy()
    built.install(emitted, script, executable=True)

    def left(z: bytes) -> Outcome:
        return shell_run(ws, krx, [z], fuel, check=False).outcome

    def right(z: bytes) -> Outcome:
        return shell_run(built, emitted, [z], fuel, check=False).outcome

    report = collect_evidence([b"", x, krx] if samples is None else samples, left, right, workers=workers)
    logging.info(f"uniform Rogers fix of {x!r}: {report.summary()}")
    return report
