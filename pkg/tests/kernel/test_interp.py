# Copyright (c) fixpoint authors. All rights reserved.
#
# This source code is licensed under the BSD license found in the
# LICENSE file in the root directory of this source tree.

""" Test the fuel-bounded kernel evaluator. """

import random

import pytest

from fixpoint.errors import OutcomeError
from fixpoint.kernel import check_b_preserving, parse, run
from fixpoint.outcome import Fault, FaultKind, Fuel, FuelExhausted, Halted
from fixpoint.theorems.constants import DS_SRC, ID_SRC, S1_SRC
from fixpoint.utils.golden_testing_data import kernel_run_data
from fixpoint.utils.testing import random_binary_program, random_bytes

LOOP = b"l_(){l_();}"


@pytest.mark.parametrize("golden", kernel_run_data)
def test_run_golden(golden):
    assert run(golden["program"], golden["a"], golden["b"]) == Halted(golden["expected"])


def test_run_accepts_parsed_program():
    assert run(parse(ID_SRC), b"q") == Halted(b"q")


def test_halted_carries_registers():
    outcome = run(S1_SRC, b"y", b"z")
    assert isinstance(outcome, Halted)
    assert (outcome.registers.a, outcome.registers.b, outcome.registers.c) == (b"y", b"y", b"y")


def test_unknown_call_faults():
    outcome = run(b"f_(){g_();}", b"")
    assert isinstance(outcome, Fault)
    assert outcome.kind is FaultKind.UNKNOWN_CALL
    assert "g_" in outcome.detail


def test_unparsable_eval_faults():
    outcome = run(b"e_(){eval();}", b"not a program")
    assert isinstance(outcome, Fault)
    assert outcome.kind is FaultKind.PARSE_INSIDE_EVAL


def test_eval_callee_sees_fresh_registers():
    # Callee returns "<a>|<b>|<c>" as it found them.
    callee = b'k_(){strcat(c,a);strcat(c,"|");strcat(c,b);strcat(c,"|");}'
    caller = b'v_(){strcpy(c,"junk");eval();}'
    assert run(caller, callee, b"in") == Halted(b"in||")


@pytest.mark.parametrize("fuel", [0, 1, 10, 1000])
def test_loop_exhausts_any_fuel(fuel):
    assert run(LOOP, b"", b"", fuel) == FuelExhausted()


def test_one_unit_per_statement():
    program = b'f_(){strcpy(c,"1");strcat(c,"2");strcat(c,"3");}'
    assert run(program, fuel=2) == FuelExhausted()
    assert run(program, fuel=3) == Halted(b"123")

    fuel = Fuel(10)
    run(program, fuel=fuel)
    assert fuel.spent == 3


def test_fuel_shared_with_eval():
    # One unit for eval(), one for the callee's strcpy.
    fuel = Fuel(100)
    assert run(b"v_(){eval();}", ID_SRC, b"x", fuel) == Halted(b"x")
    assert fuel.spent == 2
    assert run(b"v_(){eval();}", ID_SRC, b"x", 1) == FuelExhausted()


def test_deep_recursion_is_bounded_by_fuel_only():
    # Neither calls nor evals grow the host stack.
    assert run(b'r_(){strcpy(c,"x");r_();}', b"", b"", 200000) == FuelExhausted()
    nested = b"n_(){strcpy(b,a);eval();}"
    assert run(nested, nested, b"", 50000) == FuelExhausted()


def test_tail_frames_do_not_accumulate():
    outcome = run(b'r_(){ifeq(a,""){}else{strcpy(a,"");r_();}}', b"x", b"", 10)
    assert isinstance(outcome, Halted)


def test_fuel_monotonicity():
    for _ in range(100):
        program = random_binary_program()
        low = random.randint(0, 20)
        high = low + random.randint(0, 20)
        first = run(program, b"ab", b"z", low)
        second = run(program, b"ab", b"z", high)
        if isinstance(first, Halted):
            assert second == first


def test_negative_fuel_rejected():
    with pytest.raises(ValueError):
        run(ID_SRC, b"", b"", -1)


def test_check_b_preserving():
    assert check_b_preserving(ID_SRC, [(b"y", b"z")]).ok
    assert check_b_preserving(DS_SRC, [(ID_SRC, b"z"), (b"", b"")]).ok

    result = check_b_preserving(S1_SRC, [(b"y", b"y"), (b"y", b"z")])
    assert not result.ok
    assert result.violation.sample == (b"y", b"z")
    assert (result.violation.before, result.violation.after) == (b"z", b"y")


def test_check_b_preserving_skips_exhausted_samples():
    result = check_b_preserving(LOOP, [(b"", b"z")], fuel=5)
    assert result.ok
    assert result.warned
    assert result.skipped == ((b"", b"z"),)


def test_check_b_preserving_fault_raises():
    with pytest.raises(OutcomeError):
        check_b_preserving(b"f_(){g_();}", [(b"", b"")])


def test_c_starts_empty():
    assert run(b"e_(){}", b"a", b"b") == Halted(b"")


def test_eval_is_universal():
    universal = b"u_(){eval();}"
    for _ in range(50):
        program = random_binary_program()
        y = random_bytes(8)
        direct = run(program, y, b"")
        assert isinstance(direct, Halted)
        assert run(universal, program, y) == direct


def test_run_is_deterministic():
    programs = [random_binary_program() for _ in range(20)] + [b"l_(){l_();}", b"f_(){g_();}"]
    for program in programs:
        y, z = random_bytes(8), random_bytes(8)
        first, second = run(program, y, z, 500), run(program, y, z, 500)
        assert first == second
        if isinstance(first, Halted):
            assert first.registers == second.registers


def test_ds_src_preserves_b():
    samples = [(random_bytes(), random_bytes()) for _ in range(100)]
    assert check_b_preserving(DS_SRC, samples).ok
