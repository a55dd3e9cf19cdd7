from __future__ import annotations

import pytest

from pitypical.errors import NotDivisible
from pitypical.services.field import OElement
from pitypical.services.lubin_tate import default_frobenius, validate_frobenius_series
from pitypical.services.series import PowerSeries
from pitypical.services.witt import (
    CARRIER_OFIELD,
    CARRIER_ZMOD,
    DeltaOperator,
    canonical_delta,
    delta_apply,
    delta_of_one_check,
    delta_of_variable_check,
    derived_rules_check,
    identity_delta,
    lift_reconstruction_check,
    make_carrier,
    section_check,
)


def test_identity_delta_on_constants(q3) -> None:
    delta = identity_delta(make_carrier(CARRIER_ZMOD, q3))
    assert delta(2) == -2
    assert delta(1) == 0


def test_identity_delta_section(preset, rng) -> None:
    delta = identity_delta(make_carrier(CARRIER_OFIELD, preset))
    pairs = [(OElement.random(preset, rng), OElement.random(preset, rng)) for _ in range(100)]
    assert section_check(delta, pairs).passed
    assert section_check(delta, [(OElement.one(preset), OElement.one(preset))]).passed


def test_canonical_delta_of_t(preset) -> None:
    D = 10
    delta = canonical_delta(default_frobenius(preset, D), D)
    T = PowerSeries.variable(preset, D)
    assert delta(T) == T
    assert delta_of_one_check(delta).passed


def test_canonical_delta_of_t_squared(preset) -> None:
    D = 2 * preset.q + 2
    delta = canonical_delta(default_frobenius(preset, D), D)
    T = PowerSeries.variable(preset, D)
    pi = OElement.pi(preset)
    expected = PowerSeries.monomial(preset, 2, D) * pi + PowerSeries.monomial(preset, preset.q + 1, D) * 2
    assert delta(T * T) == expected


def test_canonical_delta_checks(preset, rng) -> None:
    D = 8
    delta = canonical_delta(default_frobenius(preset, D), D)
    pairs = [(delta.carrier.random(rng), delta.carrier.random(rng)) for _ in range(100)]
    assert section_check(delta, pairs).passed
    assert derived_rules_check(delta, pairs).passed
    assert lift_reconstruction_check(delta, [a for a, _ in pairs]).passed


def test_bad_lift_is_not_divisible(q2) -> None:
    carrier = make_carrier(CARRIER_ZMOD, q2)
    shifted = DeltaOperator(carrier, lambda value: value + 1, "shifted")
    with pytest.raises(NotDivisible):
        delta_apply(shifted, 0)


def test_delta_of_t_under_default_lift(preset) -> None:
    D = 8
    frobenius = default_frobenius(preset, D)
    result = delta_of_variable_check(canonical_delta(frobenius, D), frobenius, D)
    assert result.passed
    assert result.details["expected"] == "T"


def test_delta_of_t_under_other_lift(q3) -> None:
    D = 8
    frobenius = validate_frobenius_series(PowerSeries.from_coeffs(q3, [0, 3, 3, 1], D), q3)
    delta = canonical_delta(frobenius, D)
    T = PowerSeries.variable(q3, D)
    assert delta(T) == T + T * T
    result = delta_of_variable_check(delta, frobenius, D)
    assert result.passed
    assert result.details["expected"] == "(f - T^q)/pi"
