# Copyright (c) fixpoint authors. All rights reserved.
#
# This source code is licensed under the BSD license found in the
# LICENSE file in the root directory of this source tree.

import pytest

import fixpoint
from fixpoint.utils.testing import set_random_seed


@pytest.fixture(autouse=True)
def manual_seed_zero() -> None:
    set_random_seed(0)


@pytest.fixture(autouse=True)
def no_fuel_override(monkeypatch) -> None:
    monkeypatch.delenv("FIXPOINT_FUEL", raising=False)


def pytest_report_header() -> str:
    return f"fixpoint: {fixpoint.__version__}"
