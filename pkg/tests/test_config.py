# Copyright (c) fixpoint authors. All rights reserved.
#
# This source code is licensed under the BSD license found in the
# LICENSE file in the root directory of this source tree.

from fixpoint.config import (
    DEFAULT_FUEL,
    FUEL_ENV,
    default_samples,
    default_shell_samples,
    get_fuel,
    get_verifier_config,
)


def test_fuel_precedence(monkeypatch):
    assert get_fuel() == DEFAULT_FUEL
    monkeypatch.setenv(FUEL_ENV, "50")
    assert get_fuel() == 50
    assert get_fuel(7) == 7
    assert get_fuel(0) == 0


def test_bad_fuel_env_falls_back(monkeypatch, caplog):
    for raw in ["lots", "-3"]:
        monkeypatch.setenv(FUEL_ENV, raw)
        assert get_fuel() == DEFAULT_FUEL
    assert "Ignoring FIXPOINT_FUEL" in caplog.text


def test_default_samples():
    assert default_samples() == [b"", b"0", b"1", b"ab"]
    assert default_samples(b"x_(){}") == [b"", b"0", b"1", b"ab", b"x_(){}"]
    assert default_samples(b"0") == [b"", b"0", b"1", b"ab"]
    assert default_shell_samples(b"cat2") == [b"", b"cat2", b"kcat2"]


def test_verifier_config(monkeypatch):
    monkeypatch.setenv(FUEL_ENV, "123")
    config = get_verifier_config()
    assert config["fuel"] == 123
    assert config["equation_samples"] == [b"", b"0", b"xy"]
    assert config["pointwise_samples"] == [b"", b"0", b"ab"]
