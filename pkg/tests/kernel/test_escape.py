# Copyright (c) fixpoint authors. All rights reserved.
#
# This source code is licensed under the BSD license found in the
# LICENSE file in the root directory of this source tree.

""" Test the quoting discipline of kernel literals. """

import pytest

from fixpoint.errors import EscapeError, ParseError
from fixpoint.kernel import escape, unescape
from fixpoint.utils.testing import random_bytes


@pytest.mark.parametrize(
    "raw, escaped",
    [
        (b"", b""),
        (b"abc", b"abc"),
        (b'"', b'\\"'),
        (b"\\", b"\\\\"),
        (b'a"b\\c', b'a\\"b\\\\c'),
        (b"line\nbreak", b"line\nbreak"),
    ],
)
def test_escape(raw, escaped):
    assert escape(raw) == escaped
    assert unescape(escaped) == raw


def test_escape_unescape_random():
    for _ in range(1000):
        s = random_bytes(24)
        assert unescape(escape(s)) == s


@pytest.mark.parametrize("bad", [b"\\", b"ab\\", b"\\n", b'a"b'])
def test_unescape_rejects(bad):
    with pytest.raises(EscapeError):
        unescape(bad)


def test_escape_error_is_a_parse_error():
    with pytest.raises(ParseError) as e:
        unescape(b"x\\q")
    assert e.value.offset == 1
    assert "at byte 1" in str(e.value)
