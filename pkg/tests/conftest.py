from __future__ import annotations

import random

import pytest

from pitypical.services.field import LocalFieldSpec
from pitypical.services.presets import BUILTIN_PRESETS, load_preset


@pytest.fixture
def q2() -> LocalFieldSpec:
    return load_preset("q2")


@pytest.fixture
def q3() -> LocalFieldSpec:
    return load_preset("q3")


@pytest.fixture
def q2_ramified() -> LocalFieldSpec:
    return load_preset("q2-ramified")


@pytest.fixture
def q4_unramified() -> LocalFieldSpec:
    return load_preset("q4-unramified")


@pytest.fixture(params=sorted(BUILTIN_PRESETS))
def preset(request) -> LocalFieldSpec:
    return load_preset(request.param)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240)
