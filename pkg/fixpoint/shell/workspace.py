# Copyright (c) fixpoint authors. All rights reserved.
#
# This source code is licensed under the BSD license found in the
# LICENSE file in the root directory of this source tree.

"""The mini-shell's sandbox: an in-memory filesystem with executable bits.

On disk a workspace is a directory of plain files plus ``WS-MANIFEST``, one
``name<TAB>exec|noexec`` line per file sorted by name, so executable bits do
not depend on the host filesystem.
"""
from dataclasses import dataclass, field
import logging
import os
from typing import Dict, List, Union

from ..errors import FileNotFound, ShellError, WorkspaceError

__all__ = ["MANIFEST", "ShellFile", "ShellWorkspace", "Frame", "check_name", "save_workspace", "load_workspace"]

MANIFEST = "WS-MANIFEST"

_RESERVED_FILE_NAMES = (b".", b"..", os.fsencode(MANIFEST))

PathLike = Union[str, "os.PathLike[str]"]


def check_name(name: bytes) -> None:
    """File names are nonempty and contain neither ``/`` nor whitespace. ``.``,
    ``..`` and the manifest name are taken by the on-disk layout.
    """
    if not name or b"/" in name or b"\0" in name or any(c in b" \t\r\n\v\f" for c in name):
        raise ShellError(f"bad file name {name!r}")
    if name in _RESERVED_FILE_NAMES:
        raise ShellError(f"reserved file name {name!r}")


@dataclass(frozen=True)
class ShellFile:
    content: bytes
    executable: bool = False


@dataclass
class ShellWorkspace:
    files: Dict[bytes, ShellFile] = field(default_factory=dict)
    # One table per top-level invocation, shared with every script it starts.
    variables: Dict[bytes, bytes] = field(default_factory=dict)
    stdout: bytes = b""

    def copy(self) -> "ShellWorkspace":
        return ShellWorkspace(dict(self.files), dict(self.variables), self.stdout)

    def install(self, name: bytes, content: bytes, executable: bool = True) -> None:
        """Puts a file in place, replacing any file of the same name."""
        check_name(name)
        self.files[name] = ShellFile(content, executable)

    def read(self, name: bytes) -> bytes:
        try:
            return self.files[name].content
        except KeyError:
            raise FileNotFound(name) from None

    def write(self, name: bytes, content: bytes) -> None:
        """Truncating write. An existing file keeps its executable bit."""
        check_name(name)
        old = self.files.get(name)
        self.files[name] = ShellFile(content, old.executable if old is not None else False)

    def chmod(self, name: bytes, executable: bool = True) -> None:
        if name not in self.files:
            raise FileNotFound(name)
        self.files[name] = ShellFile(self.files[name].content, executable)

    def is_executable(self, name: bytes) -> bool:
        return name in self.files and self.files[name].executable


@dataclass
class Frame:
    """Positional parameters of the running script; ``$1`` is ``positional[0]``."""

    positional: List[bytes]
    script: bytes = b""

    def param(self, index: int) -> bytes:
        # $0 is not modeled.
        if 1 <= index <= len(self.positional):
            return self.positional[index - 1]
        return b""

    def copy(self) -> "Frame":
        return Frame(list(self.positional), self.script)


def _manifest_lines(ws: ShellWorkspace) -> List[str]:
    return [
        f"{os.fsdecode(name)}\t{'exec' if ws.files[name].executable else 'noexec'}\n" for name in sorted(ws.files)
    ]


def save_workspace(ws: ShellWorkspace, directory: PathLike) -> None:
    """Writes every file and the manifest. Files listed by a previous manifest
    but no longer in ``ws`` are removed. All names are checked before anything
    is written.
    """
    for name in ws.files:
        try:
            check_name(name)
        except ShellError as e:
            raise WorkspaceError(f"cannot save: {e}") from e

    os.makedirs(directory, exist_ok=True)
    manifest_path = os.path.join(directory, MANIFEST)

    if os.path.exists(manifest_path):
        for name in _read_manifest(manifest_path):
            if name not in ws.files and os.path.isfile(os.path.join(directory, os.fsdecode(name))):
                os.remove(os.path.join(directory, os.fsdecode(name)))

    for name, f in ws.files.items():
        with open(os.path.join(directory, os.fsdecode(name)), "wb") as out:
            out.write(f.content)
    with open(manifest_path, "w", newline="\n") as out:
        out.writelines(_manifest_lines(ws))
    logging.debug(f"saved {len(ws.files)} files to {directory}")


def _read_manifest(path: str) -> Dict[bytes, bool]:
    entries: Dict[bytes, bool] = {}
    with open(path, "r") as f:
        for lineno, line in enumerate(f, 1):
            line = line.rstrip("\n")
            if not line:
                continue
            name, sep, flag = line.partition("\t")
            if not sep or flag not in ("exec", "noexec"):
                raise WorkspaceError(f"{MANIFEST}:{lineno}: expected 'name<TAB>exec|noexec', got {line!r}")
            entries[os.fsencode(name)] = flag == "exec"
    return entries


def load_workspace(directory: PathLike) -> ShellWorkspace:
    """Reads a workspace written by :func:`save_workspace`.

    Raises :exc:`WorkspaceError` when the manifest names a missing file or the
    directory holds a file the manifest does not name.
    """
    manifest_path = os.path.join(directory, MANIFEST)
    if not os.path.isfile(manifest_path):
        raise WorkspaceError(f"{directory}: no {MANIFEST}")
    entries = _read_manifest(manifest_path)

    present = {os.fsencode(entry) for entry in os.listdir(directory) if entry != MANIFEST}
    missing = sorted(set(entries) - present)
    if missing:
        raise WorkspaceError(f"manifest entries without files: {', '.join(os.fsdecode(n) for n in missing)}")
    unlisted = sorted(present - set(entries))
    if unlisted:
        raise WorkspaceError(f"files without manifest entries: {', '.join(os.fsdecode(n) for n in unlisted)}")

    ws = ShellWorkspace()
    for name, executable in entries.items():
        path = os.path.join(directory, os.fsdecode(name))
        if not os.path.isfile(path):
            raise WorkspaceError(f"{os.fsdecode(name)} is not a regular file")
        with open(path, "rb") as f:
            ws.install(name, f.read(), executable)
    return ws
