# Copyright (c) fixpoint authors. All rights reserved.
#
# This source code is licensed under the BSD license found in the
# LICENSE file in the root directory of this source tree.

""" Test sampled comparison of computed functions. """

import pytest

from fixpoint.kernel import run
from fixpoint.outcome import Fault, FaultKind, FuelExhausted, Halted
from fixpoint.theorems import (
    AllAgree,
    Disagree,
    Inconclusive,
    ID_SRC,
    S1_SRC,
    Sample,
    collect_evidence,
    judge,
    verify_ext_equal,
)

LOOP = b"l_(){l_();}"
EMPTY = b"e_(){}"


def test_identical_texts_are_reflexive():
    report = verify_ext_equal(ID_SRC, b"id_() { strcpy(c, a); }")
    assert report.passed
    assert report.reflexive
    assert report.samples == ()
    assert report.summary() == "verdict=AllAgree samples=0 reflexive=True"


def test_different_texts_same_function():
    report = verify_ext_equal(ID_SRC, S1_SRC, [b"y"])
    assert report.verdict == AllAgree()
    assert not report.reflexive
    assert len(report.samples) == 1


def test_disagreement_is_located():
    report = verify_ext_equal(ID_SRC, EMPTY, [b"", b"x"])
    assert report.verdict == Disagree(b"x")
    assert not report.passed
    assert report.summary() == "verdict=Disagree samples=2 at=b'x'"
    assert [line[0] for line in report.table()] == ["=", "!"]


def test_fuel_makes_inconclusive():
    report = verify_ext_equal(LOOP, ID_SRC, [b"q"], fuel=50)
    assert report.verdict == Inconclusive(b"q")
    assert report.exhausted
    assert report.table()[0].startswith("? z=b'q': fuel exhausted")


def test_judge_prefers_disagreement():
    samples = [
        Sample(b"1", FuelExhausted(), Halted(b"")),
        Sample(b"2", Halted(b"a"), Halted(b"b")),
    ]
    assert judge(samples) == Disagree(b"2")
    assert judge(samples[:1]) == Inconclusive(b"1")
    assert judge([]) == AllAgree()


def test_faults_disagree():
    fault = Fault(FaultKind.UNKNOWN_CALL, "g_")
    assert judge([Sample(b"", fault, fault)]) == Disagree(b"")
    assert judge([Sample(b"", fault, FuelExhausted())]) == Disagree(b"")


@pytest.mark.parametrize("workers", [1, 2, 5])
def test_workers_keep_sample_order(workers):
    samples = [bytes([ord("a") + i]) * i for i in range(8)]
    report = collect_evidence(samples, lambda z: run(ID_SRC, z), lambda z: run(S1_SRC, z), workers=workers)
    assert [s.z for s in report.samples] == samples
    assert report.passed


def test_worker_exception_surfaces():
    def boom(z):
        raise RuntimeError(f"bad {z!r}")

    with pytest.raises(RuntimeError, match="bad"):
        collect_evidence([b"1", b"2", b"3"], boom, boom, workers=2)
