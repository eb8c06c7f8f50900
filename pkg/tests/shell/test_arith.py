# Copyright (c) fixpoint authors. All rights reserved.
#
# This source code is licensed under the BSD license found in the
# LICENSE file in the root directory of this source tree.

""" Test (( name = expr )) arithmetic. """

import pytest

from fixpoint.errors import ShellError, ShellParseError
from fixpoint.shell import evaluate, parse_assignment
from fixpoint.shell.arith import BinOp, Name, Neg, Num

INT64_MIN = -(2 ** 63)


def _value(text, variables=None):
    name, expr = parse_assignment(text)
    assert name == b"a"
    return evaluate(expr, variables or {})


def test_parse_assignment():
    assert parse_assignment(b"  a = 9**9 ") == (b"a", BinOp(b"**", Num(9), Num(9)))
    assert parse_assignment(b"v=-x") == (b"v", Neg(Name(b"x")))


@pytest.mark.parametrize(
    "text, expected",
    [
        (b"a = 9**9", 9 ** 9),
        (b"a = 2**3**2", 512),
        (b"a = -2**2", -4),
        (b"a = (-2)**2", 4),
        (b"a = 1+2*3", 7),
        (b"a = (1+2)*3", 9),
        (b"a = 7-2-1", 4),
        (b"a = -(-3)", 3),
        (b"a = 0**0", 1),
        (b"a = 2**63", INT64_MIN),
        (b"a = 2**64", 0),
        (b"a = 9223372036854775807 + 1", INT64_MIN),
        (b"a = 3*-2", -6),
    ],
)
def test_evaluate(text, expected):
    assert _value(text) == expected


def test_variables():
    assert _value(b"a = x*x", {b"x": b"5"}) == 25
    assert _value(b"a = missing + 1") == 1
    assert _value(b"a = x", {b"x": b""}) == 0


def test_non_integer_variable():
    with pytest.raises(ShellError, match="not an integer"):
        _value(b"a = x", {b"x": b"abc"})


def test_negative_exponent():
    with pytest.raises(ShellError, match="negative exponent"):
        _value(b"a = 2**-1")


@pytest.mark.parametrize("text", [b"", b"a = ", b"a 1", b"a = 1 +", b"a = 1 2", b"a = 1 / 2", b"a = (1"])
def test_bad_arithmetic(text):
    with pytest.raises(ShellParseError):
        parse_assignment(text)
