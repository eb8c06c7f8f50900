# Copyright (c) fixpoint authors. All rights reserved.
#
# This source code is licensed under the BSD license found in the
# LICENSE file in the root directory of this source tree.

"""Quoting discipline of kernel literals.

Only the quote and the backslash are escaped. Everything else, newlines and
arbitrary bytes included, stands for itself inside a literal, which keeps
``escape`` injective and every embedded source byte-exact.
"""
from typing import List

from ..errors import EscapeError

__all__ = ["escape", "unescape"]

QUOTE = b'"'
BACKSLASH = b"\\"


def escape(s: bytes) -> bytes:
    return s.replace(BACKSLASH, BACKSLASH + BACKSLASH).replace(QUOTE, BACKSLASH + QUOTE)


def unescape(s: bytes) -> bytes:
    """Inverse of :func:`escape`. Raises :exc:`EscapeError` on a dangling
    backslash, an unknown escape or a bare quote.
    """
    out: List[bytes] = []
    i = 0
    n = len(s)
    while i < n:
        ch = s[i : i + 1]
        if ch == BACKSLASH:
            nxt = s[i + 1 : i + 2]
            if nxt == b"":
                raise EscapeError("dangling backslash", i)
            if nxt != BACKSLASH and nxt != QUOTE:
                raise EscapeError(f"bad escape \\{nxt.decode('latin-1')}", i)
            out.append(nxt)
            i += 2
        elif ch == QUOTE:
            raise EscapeError("bare quote", i)
        else:
            # Copy the whole run up to the next special byte at once.
            stop = i + 1
            while stop < n and s[stop : stop + 1] not in (BACKSLASH, QUOTE):
                stop += 1
            out.append(s[i:stop])
            i = stop
    return b"".join(out)
