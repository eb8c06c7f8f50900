# Copyright (c) fixpoint authors. All rights reserved.
#
# This source code is licensed under the BSD license found in the
# LICENSE file in the root directory of this source tree.

"""Constructive refutation of a claimed decider for a class of computed functions.

Given a decider ``d`` (answers "0" for members of the class, "1" otherwise), a
member ``s`` and a non-member ``t``, the harness builds

    y_(){d_();ifeq(c,"0"){strcpy(c,"<t>");}else{strcpy(c,"<s>");}}d

takes its Rogers fixed point u, asks the decider about u, and checks that u
in fact behaves like the program on the *other* side of the answer.
"""
from dataclasses import dataclass
import logging
from typing import List, Optional, Sequence

from ..config import default_samples, get_fuel
from ..errors import DeciderNotBinaryOutput, OutcomeError
from ..kernel import canonicalize, escape, fn_name, run
from ..outcome import Halted
from .evidence import EvidenceReport, verify_ext_equal
from .forge import _check_names, require_b_preserving, rogers_fix

__all__ = ["RiceReport", "build_flip", "rice_witness"]


@dataclass(frozen=True)
class RiceReport:
    witness: bytes
    verdict: bytes
    # "t" when the decider answered "0", "s" when it answered "1".
    matched: str
    evidence: EvidenceReport
    contradiction: bool

    def summary(self) -> str:
        return (
            f"verdict={self.verdict.decode('latin-1')} matched={self.matched} "
            f"contradiction={str(self.contradiction).lower()}"
        )

    def describe(self) -> List[str]:
        claim = "in the class" if self.verdict == b"0" else "outside the class"
        lines = [
            f"witness u: {len(self.witness)} bytes, starts {self.witness[:40]!r}",
            f"decider says u is {claim} (verdict {self.verdict.decode('latin-1')!r})",
            f"u compared against {self.matched}: {self.evidence.verdict}",
        ]
        lines += ["  " + line for line in self.evidence.table()]
        if self.contradiction:
            lines.append(f"u behaves like {self.matched}, which contradicts the verdict")
        else:
            lines.append("no contradiction established on these samples")
        return lines


def build_flip(decider: bytes, s: bytes, t: bytes) -> bytes:
    """The program that answers t for texts the decider puts in the class and s otherwise."""
    return (
        b"y_(){"
        + fn_name(decider)
        + b'();ifeq(c,"0"){strcpy(c,"'
        + escape(t)
        + b'");}else{strcpy(c,"'
        + escape(s)
        + b'");}}'
        + decider
    )


def rice_witness(
    decider: bytes,
    s: bytes,
    t: bytes,
    samples: Optional[Sequence[bytes]] = None,
    fuel: Optional[int] = None,
    *,
    workers: int = 1,
) -> RiceReport:
    """Builds the witness u and collects the evidence that the decider is wrong about it.

    Args:
        decider (bytes):
            unary, b-preserving program answering "0" (member) or "1"
        s (bytes):
            a program whose function is in the class
        t (bytes):
            a program whose function is not
        samples (list of bytes):
            inputs on which u is compared with s or t (default: :func:`default_samples`)
        fuel (int):
            statement budget per run
    """
    decider, s, t = canonicalize(decider), canonicalize(s), canonicalize(t)
    _check_names(decider, [b"y_", b"w_", b"s_", b"x0_", b"ds_"])
    require_b_preserving(decider, None, fuel)

    u = rogers_fix(build_flip(decider, s, t), fuel=fuel)

    answer = run(decider, u, b"", get_fuel(fuel))
    if not isinstance(answer, Halted):
        raise OutcomeError("decider did not answer on the witness", answer)
    if answer.value not in (b"0", b"1"):
        raise DeciderNotBinaryOutput(answer.value)

    matched, target = ("t", t) if answer.value == b"0" else ("s", s)
    evidence = verify_ext_equal(u, target, default_samples() if samples is None else samples, fuel, workers=workers)
    report = RiceReport(u, answer.value, matched, evidence, evidence.passed)
    logging.info(f"rice: {report.summary()}")
    return report
