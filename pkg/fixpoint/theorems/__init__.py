# Copyright (c) fixpoint authors. All rights reserved.
#
# This source code is licensed under the BSD license found in the
# LICENSE file in the root directory of this source tree.

from .constants import DS_HEAD, DS_SRC, ID_SRC, RESERVED_NAMES, S1_SRC
from .evidence import (
    AllAgree,
    Disagree,
    EvidenceReport,
    Inconclusive,
    Sample,
    Verdict,
    collect_evidence,
    judge,
    verify_ext_equal,
)
from .forge import (
    ds_transform,
    kleene_fix,
    quine,
    require_b_preserving,
    rogers_fix,
    verify_diagonal,
    verify_kleene,
    verify_rogers,
)
from .rice import RiceReport, build_flip, rice_witness

__all__ = [
    "DS_HEAD",
    "DS_SRC",
    "ID_SRC",
    "S1_SRC",
    "RESERVED_NAMES",
    "ds_transform",
    "kleene_fix",
    "quine",
    "rogers_fix",
    "require_b_preserving",
    "verify_diagonal",
    "verify_kleene",
    "verify_rogers",
    "verify_ext_equal",
    "collect_evidence",
    "judge",
    "EvidenceReport",
    "Sample",
    "Verdict",
    "AllAgree",
    "Disagree",
    "Inconclusive",
    "RiceReport",
    "build_flip",
    "rice_witness",
]
