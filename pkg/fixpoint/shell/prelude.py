# Copyright (c) fixpoint authors. All rights reserved.
#
# This source code is licensed under the BSD license found in the
# LICENSE file in the root directory of this source tree.

"""Scripts installed in every fresh workspace.

``uk`` turns a script x into ``kx`` with kx z printing what x kx z prints.
``ur`` turns a script-maker x into ``krx`` which behaves like the script
that x prints when given krx. The rest are the small scripts the builders
are demonstrated on.
"""
from typing import Dict

from .workspace import ShellWorkspace

__all__ = ["PRELUDE", "install_prelude"]

PRELUDE: Dict[bytes, bytes] = {
    b"uk": b'echo "set k$1 \\$1;$(cat $1)">k$1\n' b"chmod 755 k$1\n",
    b"ur": b'echo "$1 \\$1 > ${1}_;chmod 755 ${1}_; ${1}_ \\$2"  > r$1\n' b"uk r$1\n",
    b"id": b"echo $1\n",
    b"cat2": b"cat $1 $2\n",
    b"self": b"cat $1\n",
    b"self_plus": b"cat $1;((  a = 9**9 ));echo $a\n",
    b"eecho": b"echo echo hi! > hi\n" b"chmod 755 hi\n" b"hi\n",
    b"cat2idcat2": b"set id cat2\n" b"cat2\n",
}


def install_prelude(ws: ShellWorkspace) -> ShellWorkspace:
    """Copy of ``ws`` with every prelude script installed, executable, over any
    file of the same name.
    """
    ws = ws.copy()
    for name, content in PRELUDE.items():
        ws.install(name, content, executable=True)
    return ws
