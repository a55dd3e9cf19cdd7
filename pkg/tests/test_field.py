from __future__ import annotations

import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pitypical.errors import BadPrecision, NotDivisible, NotEisenstein, PrecisionExhausted, ReducibleResidual
from pitypical.services.field import LaurentScalar, OElement, Valuation, div_pi_exact, make_field_spec, val_pi
from pitypical.services.presets import load_preset


def test_make_field_spec_for_q2() -> None:
    spec = make_field_spec(2, [0, 1], [[-2], [1]], 12)
    assert (spec.q, spec.e, spec.f, spec.n) == (2, 1, 1, 1)


def test_make_field_spec_for_ramified_quadratic() -> None:
    spec = make_field_spec(2, [0, 1], [[-2], [0], [1]], 12)
    assert (spec.q, spec.e, spec.n) == (2, 2, 2)


def test_make_field_spec_rejects_non_eisenstein() -> None:
    with pytest.raises(NotEisenstein):
        make_field_spec(2, [0, 1], [[-4], [0], [1]], 12)


def test_make_field_spec_rejects_reducible_residual() -> None:
    # y^2 + 1 = (y + 1)^2 mod 2
    with pytest.raises(ReducibleResidual):
        make_field_spec(2, [1, 0, 1], [[-2, 0], [1, 0]], 12)


def test_make_field_spec_rejects_tiny_precision() -> None:
    with pytest.raises(BadPrecision):
        make_field_spec(2, [0, 1], [[-2], [1]], 1)


def test_pi_squared_is_two(q2_ramified) -> None:
    pi = OElement.pi(q2_ramified)
    assert pi * pi == 2
    assert (1 + pi) * (1 - pi) == -1


def test_identity_laws(preset, rng) -> None:
    a = OElement.random(preset, rng)
    assert a + 0 == a
    assert a * 1 == a
    assert a - a == 0


def test_val_pi_examples(q2, q2_ramified) -> None:
    assert val_pi(OElement.zero(q2)) == math.inf
    assert val_pi(OElement.from_int(q2, 12)) == 2
    assert val_pi(OElement.from_int(q2_ramified, 2)) == 2
    assert val_pi(OElement.pi(q2_ramified)) == 1


def test_valuation_caveat(q2, q2_ramified) -> None:
    exact = OElement.zero(q2).valuation()
    assert exact == Valuation(math.inf, False)
    assert exact.is_infinite()

    vanishing = OElement.zero(q2).div_pi_exact(1)
    assert vanishing.valid_prec == q2.M - 1
    assert vanishing.is_zero() and not vanishing.is_exact_zero()
    assert val_pi(vanishing) == math.inf
    assert vanishing.valuation() == Valuation(math.inf, True)

    truncated = OElement.from_rows(q2, [[2 ** 5]], valid_prec=5)
    assert truncated.valuation().caveat

    assert OElement.from_int(q2, 12).valuation() == Valuation(2, False)
    assert OElement.pi(q2_ramified).valuation() == Valuation(1, False)


def test_div_pi_exact_examples(q2, q2_ramified) -> None:
    assert div_pi_exact(OElement.from_int(q2, 12), 2) == 3
    assert div_pi_exact(OElement.from_int(q2_ramified, 2), 1) == OElement.pi(q2_ramified)
    with pytest.raises(NotDivisible):
        div_pi_exact(OElement.from_int(q2, 3), 1)


def test_div_pi_exact_loses_digits(q2_ramified) -> None:
    two = OElement.from_int(q2_ramified, 2)
    assert div_pi_exact(two, 1).valid_prec == q2_ramified.M - 1
    assert div_pi_exact(two, 2).valid_prec == q2_ramified.M - 1


def test_div_pi_exact_runs_out_of_digits() -> None:
    spec = load_preset("q2", M=2)
    with pytest.raises(PrecisionExhausted):
        div_pi_exact(OElement.zero(spec), 2)


def test_frobenius_congruence(preset, rng) -> None:
    for _ in range(200):
        a = OElement.random(preset, rng)
        assert (a ** preset.q - a).val_pi() >= 1


def test_div_pi_round_trip(preset, rng) -> None:
    pi = OElement.pi(preset)
    for _ in range(20):
        a = OElement.random(preset, rng)
        for k in range(1, 2 * preset.e + 1):
            assert div_pi_exact(a * pi ** k, k) == a


def test_unit_inverse(q4_unramified, rng) -> None:
    for _ in range(20):
        a = OElement.random(q4_unramified, rng)
        if a.val_pi() == 0:
            assert a * a.inverse() == 1


def test_residue_of_unramified_generator(q4_unramified) -> None:
    omega = OElement.from_rows(q4_unramified, [[0, 1]])
    assert omega.residue() == (0, 1)
    # ω^2 + ω + 1 = 0
    assert omega * omega + omega + 1 == 0


def test_laurent_scalar_normalizes(q2) -> None:
    half = LaurentScalar(OElement.one(q2), 1)
    assert half * 2 == 1
    assert LaurentScalar(OElement.from_int(q2, 4), 1) == 2
    assert LaurentScalar(OElement.from_int(q2, 4), 1).denom_exp == 0
    assert half.is_integral() is False


@settings(max_examples=100, deadline=None)
@given(seed=st.integers(min_value=0, max_value=2 ** 32))
def test_ring_axioms_hold(seed: int) -> None:
    spec = load_preset("q2-ramified")
    rng = random.Random(seed)
    a, b, c = (OElement.random(spec, rng) for _ in range(3))
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c


@settings(max_examples=100, deadline=None)
@given(
    x=st.integers(min_value=1, max_value=2 ** 6 - 1),
    y=st.integers(min_value=1, max_value=2 ** 6 - 1),
)
def test_valuation_is_additive(x: int, y: int) -> None:
    spec = load_preset("q2")
    a, b = OElement.from_int(spec, x), OElement.from_int(spec, y)
    assert (a * b).val_pi() == a.val_pi() + b.val_pi()
