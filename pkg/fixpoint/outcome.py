# Copyright (c) fixpoint authors. All rights reserved.
#
# This source code is licensed under the BSD license found in the
# LICENSE file in the root directory of this source tree.

"""Results of fuel-bounded runs, shared by the kernel and the shell interpreters."""
from dataclasses import dataclass, field
from enum import Enum
from typing import TYPE_CHECKING, Optional, Union

if TYPE_CHECKING:  # pragma: no cover
    from .kernel.interp import RegisterFile

__all__ = ["Fuel", "FaultKind", "Halted", "FuelExhausted", "Fault", "Outcome", "outcomes_agree", "describe"]


class Fuel:
    """A budget of executed steps. One counter is shared by everything a run
    starts, so nested evaluation can never outspend the caller.
    ::

        fuel = Fuel(3)
        while fuel.consume():
            ...
        assert fuel.spent == 3

    """

    __slots__ = ("budget", "spent")

    def __init__(self, budget: int) -> None:
        if budget < 0:
            raise ValueError(f"fuel must be a non-negative integer ({budget} < 0)")
        self.budget = budget
        self.spent = 0

    @property
    def remaining(self) -> int:
        return self.budget - self.spent

    def consume(self) -> bool:
        """Takes one unit. Returns False, without spending, when nothing is left."""
        if self.spent >= self.budget:
            return False
        self.spent += 1
        return True

    def __repr__(self) -> str:
        return f"<Fuel {self.remaining}/{self.budget}>"


class FaultKind(str, Enum):
    UNKNOWN_CALL = "UnknownCall"
    PARSE_INSIDE_EVAL = "ParseInsideEval"
    # Shell runs report their errors through the same channel when compared.
    SHELL_ERROR = "ShellError"


@dataclass(frozen=True)
class Halted:
    """The run returned normally; ``value`` is the final content of register c
    (or the captured stdout of a shell run).
    """

    value: bytes
    registers: Optional["RegisterFile"] = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class FuelExhausted:
    def __str__(self) -> str:
        return "fuel exhausted"


@dataclass(frozen=True)
class Fault:
    kind: FaultKind
    detail: str

    def __str__(self) -> str:
        return f"{self.kind.value}: {self.detail}"


Outcome = Union[Halted, FuelExhausted, Fault]


def outcomes_agree(left: Outcome, right: Outcome) -> bool:
    """Equal halted values, or divergence on both sides at a matched budget."""
    if isinstance(left, Halted) and isinstance(right, Halted):
        return left.value == right.value
    return isinstance(left, FuelExhausted) and isinstance(right, FuelExhausted)


def describe(outcome: Outcome) -> str:
    if isinstance(outcome, Halted):
        return f"halted {outcome.value!r}"
    return str(outcome)
