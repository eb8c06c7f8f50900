# Copyright (c) fixpoint authors. All rights reserved.
#
# This source code is licensed under the BSD license found in the
# LICENSE file in the root directory of this source tree.

"""Exceptions raised by the object languages, the transformers and the verifiers."""
from typing import TYPE_CHECKING, Any, List

if TYPE_CHECKING:  # pragma: no cover
    from .outcome import Outcome

__all__: List[str] = [
    "FixpointError",
    "ParseError",
    "EscapeError",
    "NameCollision",
    "BConventionViolation",
    "DeciderNotBinaryOutput",
    "OutcomeError",
    "ShellError",
    "ShellParseError",
    "FileNotFound",
    "PermissionDenied",
    "ShellFuelExhausted",
    "WorkspaceError",
]


class FixpointError(Exception):
    """Root of every error raised by fixpoint."""


class ParseError(FixpointError):
    """A text could not be read as a program. ``offset`` is the byte offset
    where reading stopped, or -1 when no single position is to blame.
    """

    def __init__(self, message: str, offset: int = -1) -> None:
        super().__init__(message if offset < 0 else f"{message} (at byte {offset})")
        self.message = message
        self.offset = offset


class EscapeError(ParseError):
    pass


class NameCollision(FixpointError):
    """The input program defines a name the construction needs for itself."""

    def __init__(self, names: List[str]) -> None:
        super().__init__(f"program defines reserved name(s): {', '.join(names)}")
        self.names = names


class BConventionViolation(FixpointError):
    """A unary program overwrote register b on a sampled input."""

    def __init__(self, violation: Any) -> None:
        super().__init__(
            f"register b not preserved on sample a={violation.sample[0]!r} b={violation.sample[1]!r}: "
            f"{violation.before!r} -> {violation.after!r}"
        )
        self.violation = violation


class DeciderNotBinaryOutput(FixpointError):
    def __init__(self, verdict: bytes) -> None:
        super().__init__(f'decider answered {verdict!r}, expected "0" or "1"')
        self.verdict = verdict


class OutcomeError(FixpointError):
    """A run had to produce a value but exhausted its fuel or faulted."""

    def __init__(self, what: str, outcome: "Outcome") -> None:
        super().__init__(f"{what}: {outcome}")
        self.outcome = outcome


class ShellError(FixpointError):
    #: Exit status a shell would report for this failure.
    status = 1


class ShellParseError(ShellError, ParseError):
    status = 2

    def __init__(self, message: str, offset: int = -1) -> None:
        ParseError.__init__(self, message, offset)


class FileNotFound(ShellError):
    status = 127

    def __init__(self, name: bytes) -> None:
        super().__init__(f"{name.decode('latin-1')}: no such file")
        self.name = name


class PermissionDenied(ShellError):
    status = 126

    def __init__(self, name: bytes) -> None:
        super().__init__(f"{name.decode('latin-1')}: permission denied")
        self.name = name


class ShellFuelExhausted(ShellError):
    status = 124


class WorkspaceError(ShellError):
    """The on-disk workspace and its manifest disagree."""
