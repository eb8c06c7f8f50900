# Copyright (c) fixpoint authors. All rights reserved.
#
# This source code is licensed under the BSD license found in the
# LICENSE file in the root directory of this source tree.

"""A sandboxed shell subset and the uniform fixed-point builders written in it."""
from .arith import evaluate, parse_assignment
from .interp import ShellResult, expand, shell_run
from .parser import script_arity, shell_parse
from .prelude import PRELUDE, install_prelude
from .syntax import Arithmetic, Command, Lit, Param, Quoted, Script, SimpleCommand, Subst, Var, Word
from .uniform import (
    DEMO_TRANSCRIPTS,
    DEMOS,
    DemoTranscript,
    demo_self_plus,
    run_demo,
    uk_apply,
    ur_apply,
    verify_uniform_fix,
    verify_uniform_rogers,
)
from .workspace import MANIFEST, Frame, ShellFile, ShellWorkspace, check_name, load_workspace, save_workspace

__all__ = [
    "shell_parse",
    "script_arity",
    "expand",
    "shell_run",
    "ShellResult",
    "evaluate",
    "parse_assignment",
    "ShellWorkspace",
    "ShellFile",
    "Frame",
    "MANIFEST",
    "check_name",
    "save_workspace",
    "load_workspace",
    "PRELUDE",
    "install_prelude",
    "uk_apply",
    "ur_apply",
    "demo_self_plus",
    "run_demo",
    "DEMOS",
    "DEMO_TRANSCRIPTS",
    "DemoTranscript",
    "verify_uniform_fix",
    "verify_uniform_rogers",
    "Word",
    "Lit",
    "Param",
    "Var",
    "Subst",
    "Quoted",
    "SimpleCommand",
    "Arithmetic",
    "Command",
    "Script",
]
