from __future__ import annotations

import pytest

from pitypical.errors import SpecMismatch
from pitypical.services.field import OElement
from pitypical.services.witt import (
    CARRIER_OFIELD,
    CARRIER_SERIES,
    CARRIER_ZMOD,
    WittPair,
    ghost_map,
    make_carrier,
    projection,
    ring_axiom_report,
    witt_add,
    witt_mul,
    witt_mul_literal,
    witt_neg,
)


@pytest.fixture
def zmod2(q2):
    return make_carrier(CARRIER_ZMOD, q2)


def test_addition_examples(zmod2) -> None:
    one_one = WittPair.of(zmod2, 1, 1)
    assert one_one + one_one == WittPair.of(zmod2, 2, 1)
    assert WittPair.of(zmod2, 5, 0) + WittPair.of(zmod2, 0, 7) == WittPair.of(zmod2, 5, 7)
    assert one_one + WittPair.zero(zmod2) == one_one


def test_multiplication_examples(zmod2) -> None:
    one_one = WittPair.of(zmod2, 1, 1)
    assert one_one * one_one == WittPair.of(zmod2, 1, 4)
    assert WittPair.of(zmod2, 2, 0) * WittPair.of(zmod2, 0, 1) == WittPair.of(zmod2, 0, 4)
    assert one_one * WittPair.one(zmod2) == one_one


def test_ghost_examples(zmod2) -> None:
    assert ghost_map(WittPair.one(zmod2)) == (1, 1)
    assert ghost_map(WittPair.of(zmod2, 0, 1)) == (0, 2)
    one_one = WittPair.of(zmod2, 1, 1)
    assert ghost_map(one_one + one_one) == (2, 6)


def test_ghost_of_kernel_element_is_pi(q2_ramified) -> None:
    carrier = make_carrier(CARRIER_OFIELD, q2_ramified)
    first, second = ghost_map(WittPair.of(carrier, 0, 1))
    assert first == 0
    assert second == OElement.pi(q2_ramified)


def test_negation(preset, rng) -> None:
    carrier = make_carrier(CARRIER_OFIELD, preset)
    for _ in range(20):
        a = WittPair(carrier, carrier.random(rng), carrier.random(rng))
        assert witt_add(a, witt_neg(a)) == WittPair.zero(carrier)


def test_projection_is_a_ring_map(zmod2) -> None:
    a, b = WittPair.of(zmod2, 3, 5), WittPair.of(zmod2, 7, 1)
    assert projection(a + b) == 10
    assert projection(a * b) == 21


def test_zmod_needs_prime_field(q2_ramified) -> None:
    with pytest.raises(SpecMismatch):
        make_carrier(CARRIER_ZMOD, q2_ramified)


def test_carriers_do_not_mix(q2, q3) -> None:
    with pytest.raises(SpecMismatch):
        WittPair.one(make_carrier(CARRIER_ZMOD, q2)) + WittPair.one(make_carrier(CARRIER_ZMOD, q3))


@pytest.mark.parametrize(
    "preset_name, carrier_name, trials",
    [
        ("q2", CARRIER_ZMOD, 200),
        ("q3", CARRIER_ZMOD, 200),
        ("q2-ramified", CARRIER_OFIELD, 200),
        ("q4-unramified", CARRIER_OFIELD, 50),
        ("q3", CARRIER_SERIES, 5),
    ],
)
def test_ring_axioms(preset_name: str, carrier_name: str, trials: int) -> None:
    from pitypical.services.presets import load_preset

    carrier = make_carrier(carrier_name, load_preset(preset_name), D=5)
    report = ring_axiom_report(carrier, trials, seed=11)
    assert [result.name for result in report if not result.passed] == []


def test_literal_multiplication_fails_ghost_test(zmod2) -> None:
    report = {result.name: result for result in ring_axiom_report(zmod2, 20, seed=3, mul=witt_mul_literal)}
    ghost = report["ghost-multiplicative"]
    assert not ghost.passed
    assert set(ghost.details["counterexample"]) == {"a", "b", "c"}


def test_literal_and_crossed_rules_differ_by_cross_term(zmod2) -> None:
    a, b = WittPair.of(zmod2, 3, 1), WittPair.of(zmod2, 1, 0)
    crossed, literal = witt_mul(a, b), witt_mul_literal(a, b)
    assert crossed.a0 == literal.a0
    assert literal.a1 - crossed.a1 == (1 - 0) * (9 - 1)
