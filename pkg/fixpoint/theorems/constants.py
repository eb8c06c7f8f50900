# Copyright (c) fixpoint authors. All rights reserved.
#
# This source code is licensed under the BSD license found in the
# LICENSE file in the root directory of this source tree.

"""Object-level sources shipped with the transformers."""
from typing import FrozenSet

__all__ = ["ID_SRC", "S1_SRC", "DS_HEAD", "DS_SRC", "RESERVED_NAMES"]

#: id:y=y
ID_SRC = b"id_(){strcpy(c,a);}"

#: s1:y,z=y
S1_SRC = b"s1_(){strcpy(c,a);strcpy(b,a);}"

#: Every diagonal substitution starts with these bytes, followed by the
#: escaped source of the program being substituted.
DS_HEAD = b's_(){strcpy(b,a);strcpy(a,"'

#: The diagonal substitution written in the kernel language itself. It reads
#: register a only and writes register c only; b survives the call untouched.
DS_SRC = (
    b'ds_(){strcpy(c,"s_(){strcpy(b,a);strcpy(a,\\"");strcatq(c,a);strcat(c,"\\");");'
    b'strcatfn(c,a);strcat(c,"();}");strcat(c,a);}'
)

RESERVED_NAMES: FrozenSet[bytes] = frozenset([b"s_", b"x0_", b"w_", b"y_", b"ds_"])
