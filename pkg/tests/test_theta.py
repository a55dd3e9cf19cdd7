from __future__ import annotations

import pytest

from pitypical.errors import OutOfRange
from pitypical.services.field import LaurentScalar, OElement
from pitypical.services.series import PowerSeries
from pitypical.services.theta import (
    denominator_bound,
    frobenius_identity_check,
    leading_coefficient_check,
    recursion_identity_check,
    theta_eval_check,
    theta_family,
    theta_poly,
    theta_value,
    theta_value_recursive,
)


def laurent(spec, num: int, denom_exp: int) -> LaurentScalar:
    return LaurentScalar(OElement.from_int(spec, num), denom_exp)


def test_theta_zero_is_t(preset) -> None:
    assert theta_poly(preset, 0).poly == PowerSeries.variable(preset, 1)


def test_theta_one_closed_form(preset) -> None:
    theta_1 = theta_poly(preset, 1)
    inverse_pi = LaurentScalar(OElement.one(preset), 1)
    expected = [0, inverse_pi] + [0] * (preset.q - 2) + [-inverse_pi]
    assert theta_1.degree() == preset.q
    assert theta_1.poly == PowerSeries.from_coeffs(preset, expected, preset.q, laurent=True)


def test_theta_two_over_q2(q2) -> None:
    expected = [0, laurent(q2, 2, 3), laurent(q2, -1, 3), laurent(q2, 2, 3), laurent(q2, -3, 3)]
    assert theta_poly(q2, 2).poly == PowerSeries.from_coeffs(q2, expected, 4, laurent=True)


def test_theta_two_at_three(q2) -> None:
    assert theta_value(q2, 2, 3) == -24
    assert theta_value_recursive(q2, 2, 3) == -24


def test_theta_vanishes_at_zero(preset) -> None:
    for k in range(4):
        assert theta_value(preset, k, 0) == 0


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_theta_values_are_integral(q2_ramified, rng, k: int) -> None:
    points = [OElement.random(q2_ramified, rng) for _ in range(50)]
    result = theta_eval_check(q2_ramified, k, points)
    assert result.passed, result.details["failures"]


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_theta_integral_on_every_preset(preset, rng, k: int) -> None:
    points = [OElement.random(preset, rng) for _ in range(100)]
    result = theta_eval_check(preset, k, points)
    assert result.passed, result.details["failures"]
    assert result.details["samples"] == 100


def test_frobenius_identity(preset, rng) -> None:
    points = [OElement.random(preset, rng) for _ in range(20)]
    result = frobenius_identity_check(preset, points)
    assert result.passed
    assert result.details["polynomial_identity"]


@pytest.mark.parametrize("k", [1, 2, 3])
def test_recursion_and_leading_coefficient(preset, k: int) -> None:
    assert recursion_identity_check(preset, k).passed
    assert leading_coefficient_check(preset, k).passed


def test_leading_coefficient_of_theta_one_over_qp(q3) -> None:
    assert theta_poly(q3, 1).leading_coefficient() == laurent(q3, -1, 1)


def test_denominator_bound_grows() -> None:
    assert denominator_bound(2, 0) == 0
    assert denominator_bound(2, 1) == 1
    assert denominator_bound(2, 2) >= 3


def test_negative_k_is_rejected(q2) -> None:
    with pytest.raises(OutOfRange):
        theta_family(q2, -1)
