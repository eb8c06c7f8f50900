# Copyright (c) fixpoint authors. All rights reserved.
#
# This source code is licensed under the BSD license found in the
# LICENSE file in the root directory of this source tree.

"""Pointwise evidence for equations between computed functions.

Equality of computed functions cannot be decided; what can be checked is
agreement on a finite set of inputs under a bounded budget. A report keeps
every sample so a failed comparison can be inspected afterwards.
"""
from dataclasses import dataclass
import functools
import logging
from typing import Callable, List, Optional, Sequence, Tuple, Union

from ..config import default_samples, get_fuel
from ..kernel import canonicalize, run
from ..outcome import Fault, FuelExhausted, Halted, Outcome
from ..utils.worker import run_tasks

__all__ = [
    "Sample",
    "AllAgree",
    "Disagree",
    "Inconclusive",
    "Verdict",
    "EvidenceReport",
    "collect_evidence",
    "judge",
    "verify_ext_equal",
]


@dataclass(frozen=True)
class Sample:
    z: bytes
    left: Outcome
    right: Outcome


@dataclass(frozen=True)
class AllAgree:
    def __str__(self) -> str:
        return "AllAgree"


@dataclass(frozen=True)
class Disagree:
    at: bytes

    def __str__(self) -> str:
        return f"Disagree(at={self.at!r})"


@dataclass(frozen=True)
class Inconclusive:
    """Fuel ran out on at least one side; nothing was contradicted."""

    at: bytes

    def __str__(self) -> str:
        return f"Inconclusive(at={self.at!r})"


Verdict = Union[AllAgree, Disagree, Inconclusive]


def _sample_agrees(sample: Sample) -> Optional[bool]:
    """True / False when the sample settles the question, None when fuel ran out."""
    left, right = sample.left, sample.right
    if isinstance(left, Fault) or isinstance(right, Fault):
        return False
    if isinstance(left, Halted) and isinstance(right, Halted):
        return left.value == right.value
    return None


def judge(samples: Sequence[Sample]) -> Verdict:
    undecided: Optional[Sample] = None
    for sample in samples:
        agrees = _sample_agrees(sample)
        if agrees is False:
            return Disagree(sample.z)
        if agrees is None and undecided is None:
            undecided = sample
    if undecided is not None:
        return Inconclusive(undecided.z)
    return AllAgree()


@dataclass(frozen=True)
class EvidenceReport:
    samples: Tuple[Sample, ...]
    verdict: Verdict
    # Both sides were the same text, so they agree without being run.
    reflexive: bool = False

    @property
    def passed(self) -> bool:
        return isinstance(self.verdict, AllAgree)

    @property
    def exhausted(self) -> bool:
        return any(isinstance(s.left, FuelExhausted) or isinstance(s.right, FuelExhausted) for s in self.samples)

    def summary(self) -> str:
        """Single-line ``key=value`` record."""
        verdict = type(self.verdict).__name__
        fields = [f"verdict={verdict}", f"samples={len(self.samples)}"]
        if not isinstance(self.verdict, AllAgree):
            fields.append(f"at={self.verdict.at!r}")
        if self.reflexive:
            fields.append("reflexive=True")
        return " ".join(fields)

    def table(self) -> List[str]:
        """Human-readable lines, one per sample."""
        lines = []
        for s in self.samples:
            mark = {True: "=", False: "!", None: "?"}[_sample_agrees(s)]
            lines.append(f"{mark} z={s.z!r}: {_show(s.left)} | {_show(s.right)}")
        return lines


def _show(outcome: Outcome, limit: int = 60) -> str:
    if isinstance(outcome, Halted):
        text = repr(outcome.value)
        return "halted " + (text if len(text) <= limit else text[: limit - 3] + "...")
    return str(outcome)


def collect_evidence(
    samples: Sequence[bytes],
    left: Callable[[bytes], Outcome],
    right: Callable[[bytes], Outcome],
    *,
    workers: int = 1,
) -> EvidenceReport:
    """Runs both sides on every sample, ``workers`` samples at a time."""

    def one(z: bytes) -> Sample:
        return Sample(z, left(z), right(z))

    results = run_tasks([functools.partial(one, z) for z in samples], workers=workers)
    report = EvidenceReport(tuple(results), judge(results))
    logging.info(f"evidence over {len(results)} samples: {report.verdict}")
    return report


def verify_ext_equal(
    p: bytes, q: bytes, samples: Optional[Sequence[bytes]] = None, fuel: Optional[int] = None, *, workers: int = 1,
) -> EvidenceReport:
    """Checks that p and q compute the same outputs on ``samples``, running both with ``a=z``, ``b=""``.

    Byte-identical programs agree by determinism and are not run.
    """
    p = canonicalize(p)
    q = canonicalize(q)
    if p == q:
        return EvidenceReport((), AllAgree(), reflexive=True)

    budget = get_fuel(fuel)
    if samples is None:
        samples = default_samples(p)
    return collect_evidence(
        samples, lambda z: run(p, z, b"", budget), lambda z: run(q, z, b"", budget), workers=workers
    )
