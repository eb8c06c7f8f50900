# Copyright (c) fixpoint authors. All rights reserved.
#
# This source code is licensed under the BSD license found in the
# LICENSE file in the root directory of this source tree.

""" Test reading mini-shell scripts. """

import re

import pytest

from fixpoint.errors import ShellParseError
from fixpoint.shell import (
    PRELUDE,
    Arithmetic,
    Lit,
    Param,
    Quoted,
    SimpleCommand,
    Subst,
    Var,
    Word,
    script_arity,
    shell_parse,
)
from fixpoint.shell.arith import BinOp, Num


def _w(*segments):
    return Word(tuple(segments))


def test_commands_split_on_semicolons_and_newlines():
    assert shell_parse(b"set kself $1;cat $1\n") == (
        SimpleCommand((_w(Lit(b"set")), _w(Lit(b"kself")), _w(Param(1)))),
        SimpleCommand((_w(Lit(b"cat")), _w(Param(1)))),
    )
    assert shell_parse(b"\n;  ;\n") == ()


def test_redirect():
    assert shell_parse(b"echo echo hi! > hi") == (
        SimpleCommand((_w(Lit(b"echo")), _w(Lit(b"echo")), _w(Lit(b"hi!"))), _w(Lit(b"hi"))),
    )
    assert shell_parse(b"echo x>k$1")[0].redirect == _w(Lit(b"k"), Param(1))


def test_quoted_escapes():
    (command,) = shell_parse(b'echo "a $1 \\$1 \\" \\x"')
    assert command.words[1] == _w(Quoted((Lit(b"a "), Param(1), Lit(b' $1 " \\x'))))
    assert command.words[1].quoted
    assert not command.words[0].quoted


def test_braced_and_named_expansions():
    (command,) = shell_parse(b"echo ${1}_ $name ${name}x $12")
    assert command.words[1:] == (
        _w(Param(1), Lit(b"_")),
        _w(Var(b"name")),
        _w(Var(b"name"), Lit(b"x")),
        _w(Param(1), Lit(b"2")),
    )


def test_substitution():
    (command,) = shell_parse(b"echo [$(cat $1; echo x)]")
    inner = (
        SimpleCommand((_w(Lit(b"cat")), _w(Param(1)))),
        SimpleCommand((_w(Lit(b"echo")), _w(Lit(b"x")))),
    )
    assert command.words[1] == _w(Lit(b"["), Subst(inner), Lit(b"]"))


def test_literal_dollar_and_backslash():
    (command,) = shell_parse(b"echo $ a\\;b \\$1")
    assert command.words[1:] == (_w(Lit(b"$")), _w(Lit(b"a;b")), _w(Lit(b"$1")))


def test_arithmetic_command():
    assert shell_parse(b"((  a = 9**9 ));echo $a") == (
        Arithmetic(b"a", BinOp(b"**", Num(9), Num(9))),
        SimpleCommand((_w(Lit(b"echo")), _w(Var(b"a")))),
    )


@pytest.mark.parametrize("name", sorted(PRELUDE))
def test_prelude_parses(name):
    assert shell_parse(PRELUDE[name])


@pytest.mark.parametrize(
    "text, message",
    [
        (b'echo "abc', "unbalanced quotes"),
        (b"echo $(cat x", "unbalanced parentheses"),
        (b"echo )", "unbalanced parentheses"),
        (b"(( a = (1 ))", "unbalanced parentheses"),
        (b"echo ${1", "unbalanced braces"),
        (b"echo a(b", "unexpected '('"),
        (b"echo a\\", "dangling backslash"),
        (b"echo >", "missing redirect target"),
        (b"echo ${1x}", "bad substitution"),
        (b"(( 1 = 2 ))", "arithmetic must assign to a name"),
        (b"(( a = 2 )) x", "unexpected text after arithmetic"),
    ],
)
def test_parse_errors(text, message):
    with pytest.raises(ShellParseError, match=re.escape(message)):
        shell_parse(text)


@pytest.mark.parametrize(
    "content, arity",
    [
        (PRELUDE[b"eecho"], 0),
        (PRELUDE[b"id"], 1),
        (PRELUDE[b"uk"], 1),
        # \$2 is written out, not expanded.
        (PRELUDE[b"ur"], 1),
        (PRELUDE[b"cat2"], 2),
        (b'echo "$(echo ${3})"', 3),
    ],
)
def test_script_arity(content, arity):
    assert script_arity(content) == arity
