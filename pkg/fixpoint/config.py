# Copyright (c) fixpoint authors. All rights reserved.
#
# This source code is licensed under the BSD license found in the
# LICENSE file in the root directory of this source tree.

import logging
import os
from typing import Any, Dict, List, Optional

__all__ = ["DEFAULT_FUEL", "FUEL_ENV", "get_fuel", "default_samples", "default_shell_samples", "get_verifier_config"]

DEFAULT_FUEL = 100000

FUEL_ENV = "FIXPOINT_FUEL"


def get_fuel(override: Optional[int] = None) -> int:
    """Explicit value first, then $FIXPOINT_FUEL, then :data:`DEFAULT_FUEL`."""
    if override is not None:
        return override

    raw = os.getenv(FUEL_ENV)
    if raw is None:
        return DEFAULT_FUEL

    try:
        value = int(raw)
    except ValueError:
        value = -1
    if value < 0:
        logging.warning(f"Ignoring {FUEL_ENV}={raw!r}, expected a non-negative integer")
        return DEFAULT_FUEL
    return value


def default_samples(own_text: bytes = b"") -> List[bytes]:
    """Empty input, the decider alphabet, a short word and the program's own text."""
    samples = [b"", b"0", b"1", b"ab"]
    if own_text not in samples:
        samples.append(own_text)
    return samples


def get_verifier_config() -> Dict[str, Any]:
    """Settings shared by the acceptance suites and the CLI verifiers."""
    return {
        "fuel": get_fuel(),
        "workers": 1,
        # Samples used by the diagonal and Kleene acceptance suites.
        "equation_samples": [b"", b"0", b"xy"],
        # Samples used for the Rogers and Rice pointwise comparisons.
        "pointwise_samples": [b"", b"0", b"ab"],
    }


def default_shell_samples(script: bytes) -> List[bytes]:
    """Arguments for the uniform shell checks: nothing, the script itself and its ``k`` image.

    Every sample names a file (or nothing), so commands like ``cat $2`` succeed on both sides.
    """
    return [b"", script, b"k" + script]
