# Copyright (c) fixpoint authors. All rights reserved.
#
# This source code is licensed under the BSD license found in the
# LICENSE file in the root directory of this source tree.

""" Test parsing, canonical serialization and definition headers. """

import pytest

from fixpoint.errors import ParseError
from fixpoint.kernel import (
    Call,
    CatEsc,
    CatFn,
    Copy,
    Eval,
    IfEq,
    KernelProgram,
    Literal,
    Register,
    canonicalize,
    fn_name,
    header_prefix,
    parse,
    serialize,
)
from fixpoint.theorems.constants import DS_SRC, ID_SRC, S1_SRC
from fixpoint.utils.golden_testing_data import bad_kernel_data, pretty_kernel_data
from fixpoint.utils.testing import random_program


def test_parse_id():
    program = parse(ID_SRC)
    assert program.names == [b"id_"]
    assert program.entry.body == (Copy(Register.c, Register.a),)


def test_parse_every_statement():
    text = b'f_(){strcpy(a,"x");strcatq(c,a);strcatfn(c,b);g_();eval();ifeq(b,"1"){}else{g_();}}g_(){}'
    body = parse(text).entry.body
    assert body == (
        Copy(Register.a, Literal(b"x")),
        CatEsc(Register.c, Register.a),
        CatFn(Register.c, Register.b),
        Call(b"g_"),
        Eval(),
        IfEq(Register.b, Literal(b"1"), (), (Call(b"g_"),)),
    )
    assert serialize(parse(text)) == text


@pytest.mark.parametrize("golden", pretty_kernel_data)
def test_pretty_to_canonical(golden):
    assert canonicalize(golden["pretty"]) == golden["canonical"]
    assert canonicalize(golden["canonical"]) == golden["canonical"]


@pytest.mark.parametrize("golden", bad_kernel_data)
def test_parse_errors(golden):
    with pytest.raises(ParseError) as e:
        parse(golden["text"])
    assert golden["message"] in str(e.value)


def test_parse_error_offset():
    with pytest.raises(ParseError) as e:
        parse(b"id_(){strcpy(q,a);}")
    assert e.value.offset == len(b"id_(){strcpy(")


def test_literal_keeps_newlines_and_escapes():
    program = parse(b'n_(){strcpy(c,"a\nb\\"\\\\");}')
    assert program.entry.body[0] == Copy(Register.c, Literal(b'a\nb"\\'))


def test_round_trip_random_programs():
    for _ in range(1000):
        program = random_program()
        text = serialize(program)
        assert parse(text) == program
        assert serialize(parse(text)) == text


def test_program_requires_definitions():
    with pytest.raises(ValueError):
        KernelProgram(())


@pytest.mark.parametrize("text, name", [(ID_SRC, b"id_"), (S1_SRC, b"s1_"), (DS_SRC, b"ds_")])
def test_fn_name(text, name):
    assert fn_name(text) == name
    assert header_prefix(text) == name


def test_fn_name_of_random_programs():
    for _ in range(200):
        p = random_program()
        text = serialize(p)
        assert fn_name(text) == p.entry.name
        assert header_prefix(text) == p.entry.name


@pytest.mark.parametrize("text", [b"", b"no paren", b"Bad_(){}", b"x(){}"])
def test_fn_name_is_strict(text):
    with pytest.raises(ParseError):
        fn_name(text)


def test_header_prefix_is_lenient():
    assert header_prefix(b"no paren") == b"no paren"
    assert header_prefix(b"") == b""
    assert header_prefix(b"Bad_(){}") == b"Bad_"
