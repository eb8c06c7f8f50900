# Copyright (c) fixpoint authors. All rights reserved.
#
# This source code is licensed under the BSD license found in the
# LICENSE file in the root directory of this source tree.

""" Test the in-memory workspace and its on-disk form. """

import os

import pytest

from fixpoint.errors import FileNotFound, ShellError, WorkspaceError
from fixpoint.shell import (
    MANIFEST,
    PRELUDE,
    Frame,
    ShellFile,
    ShellWorkspace,
    check_name,
    install_prelude,
    load_workspace,
    save_workspace,
    shell_run,
)


@pytest.mark.parametrize("name", [b"", b"a/b", b"a b", b"a\nb", b".", b"..", b"WS-MANIFEST"])
def test_bad_names(name):
    with pytest.raises(ShellError):
        check_name(name)


def test_write_and_chmod():
    ws = ShellWorkspace()
    ws.write(b"f", b"1")
    assert not ws.is_executable(b"f")
    ws.chmod(b"f")
    ws.write(b"f", b"2")
    assert ws.is_executable(b"f")
    assert ws.read(b"f") == b"2"
    with pytest.raises(FileNotFound):
        ws.chmod(b"g")
    with pytest.raises(FileNotFound):
        ws.read(b"g")
    assert not ws.is_executable(b"g")


def test_copy_is_independent():
    ws = ShellWorkspace()
    ws.install(b"f", b"1")
    other = ws.copy()
    other.install(b"f", b"2")
    assert ws.read(b"f") == b"1"


def test_frame_parameters():
    frame = Frame([b"x", b"y"])
    assert [frame.param(i) for i in range(4)] == [b"", b"x", b"y", b""]
    copy = frame.copy()
    copy.positional[:] = [b"z"]
    assert frame.param(1) == b"x"


def test_install_prelude_is_idempotent():
    ws = ShellWorkspace()
    ws.install(b"id", b"echo changed", executable=False)
    once = install_prelude(ws)
    assert once.read(b"id") == PRELUDE[b"id"]
    assert all(once.is_executable(name) for name in PRELUDE)
    assert install_prelude(once).files == once.files
    assert ws.read(b"id") == b"echo changed"


def test_save_and_load(tmp_path):
    ws = install_prelude(ShellWorkspace())
    ws.install(b"data", b"\x00\xff raw", executable=False)
    save_workspace(ws, tmp_path)

    manifest = (tmp_path / MANIFEST).read_text().splitlines()
    assert manifest == sorted(manifest)
    assert "data\tnoexec" in manifest
    assert "uk\texec" in manifest

    loaded = load_workspace(tmp_path)
    assert loaded.files == ws.files


def test_save_removes_dropped_files(tmp_path):
    ws = ShellWorkspace()
    ws.install(b"a", b"1")
    ws.install(b"b", b"2")
    save_workspace(ws, tmp_path)
    del ws.files[b"b"]
    save_workspace(ws, tmp_path)
    assert sorted(os.listdir(tmp_path)) == [MANIFEST, "a"]
    assert load_workspace(tmp_path).files == ws.files


@pytest.mark.parametrize("name", [MANIFEST.encode(), b".", b".."])
def test_save_checks_every_name_before_writing(tmp_path, name):
    ws = ShellWorkspace()
    ws.install(b"a", b"1")
    # Bypasses install(), which would refuse the name.
    ws.files[name] = ShellFile(b"hi")
    with pytest.raises(WorkspaceError):
        save_workspace(ws, tmp_path)
    assert os.listdir(tmp_path) == []


def test_redirect_to_reserved_name_keeps_workspace_saveable(tmp_path):
    ws = ShellWorkspace()
    ws.install(b"t", b"echo a > newfile\necho hi > ..")
    result = shell_run(ws, b"t", check=False)
    assert isinstance(result.error, ShellError)
    assert b".." not in result.workspace.files

    save_workspace(result.workspace, tmp_path)
    assert load_workspace(tmp_path).files == result.workspace.files


def test_load_missing_manifest(tmp_path):
    with pytest.raises(WorkspaceError, match="no WS-MANIFEST"):
        load_workspace(tmp_path)


@pytest.mark.parametrize(
    "manifest, files, message",
    [
        ("a\texec\n", [], "without files"),
        ("a\texec\n", ["a", "b"], "without manifest entries"),
        ("a exec\n", ["a"], "expected"),
        ("a\trwx\n", ["a"], "expected"),
    ],
)
def test_load_inconsistent(tmp_path, manifest, files, message):
    (tmp_path / MANIFEST).write_text(manifest)
    for name in files:
        (tmp_path / name).write_bytes(b"")
    with pytest.raises(WorkspaceError, match=message):
        load_workspace(tmp_path)
