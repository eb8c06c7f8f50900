# Copyright (c) fixpoint authors. All rights reserved.
#
# This source code is licensed under the BSD license found in the
# LICENSE file in the root directory of this source tree.

import pytest

from fixpoint.outcome import Fault, FaultKind, Fuel, FuelExhausted, Halted, describe, outcomes_agree


def test_fuel():
    fuel = Fuel(2)
    assert fuel.consume() and fuel.consume()
    assert not fuel.consume()
    assert (fuel.spent, fuel.remaining) == (2, 0)
    assert repr(fuel) == "<Fuel 0/2>"
    with pytest.raises(ValueError):
        Fuel(-1)


def test_outcomes_agree():
    assert outcomes_agree(Halted(b"x"), Halted(b"x"))
    assert not outcomes_agree(Halted(b"x"), Halted(b"y"))
    assert outcomes_agree(FuelExhausted(), FuelExhausted())
    assert not outcomes_agree(FuelExhausted(), Halted(b""))
    fault = Fault(FaultKind.UNKNOWN_CALL, "g_")
    assert not outcomes_agree(fault, fault)


def test_halted_ignores_registers_in_comparison():
    assert Halted(b"x", registers=None) == Halted(b"x")


def test_describe():
    assert describe(Halted(b"x")) == "halted b'x'"
    assert describe(FuelExhausted()) == "fuel exhausted"
    assert describe(Fault(FaultKind.PARSE_INSIDE_EVAL, "empty program")) == "ParseInsideEval: empty program"
