from __future__ import annotations

import random

import pytest
from sympy import Poly, Symbol, expand

from pitypical.errors import NonzeroConstant, NotDivisible, NotUnit
from pitypical.services.field import OElement
from pitypical.services.series import BivariateSeries, PowerSeries, compose, exact_divide, invert_unit, reductions


def series(spec, coeffs, D=None):
    return PowerSeries.from_coeffs(spec, coeffs, len(coeffs) - 1 if D is None else D)


def random_series(spec, rng: random.Random, D: int, constant: bool = True) -> PowerSeries:
    coeffs = [OElement.random(spec, rng) for _ in range(D + 1)]
    if not constant:
        coeffs[0] = OElement.zero(spec)
    return PowerSeries.from_coeffs(spec, coeffs, D)


def test_ring_examples(q2) -> None:
    T = PowerSeries.variable(q2, 6)
    f = series(q2, [0, 2, 1], 6)
    assert T * T == PowerSeries.monomial(q2, 2, 6)
    assert f + series(q2, [0, 0, -1], 6) == series(q2, [0, 2], 6)
    assert f * f == series(q2, [0, 0, 4, 4, 1], 6)
    assert f ** 2 == f * f


def test_compose_examples(q2) -> None:
    f = series(q2, [0, 2, 1], 8)
    assert compose(f, PowerSeries.variable(q2, 8)) == f
    assert compose(PowerSeries.monomial(q2, 2, 8), f) == series(q2, [0, 0, 4, 4, 1], 8)
    assert compose(f, f) == series(q2, [0, 4, 6, 4, 1], 8)


def test_compose_needs_zero_constant(q2) -> None:
    with pytest.raises(NonzeroConstant):
        compose(PowerSeries.variable(q2, 4), PowerSeries.one(q2, 4))


def test_compose_is_associative(preset, rng) -> None:
    D = 10
    a = random_series(preset, rng, D)
    b = random_series(preset, rng, D, constant=False)
    c = random_series(preset, rng, D, constant=False)
    assert compose(compose(a, b), c) == compose(a, compose(b, c))


def test_invert_unit_examples(q2) -> None:
    D = 8
    geometric = invert_unit(series(q2, [1, 1], D))
    assert geometric == series(q2, [(-1) ** i for i in range(D + 1)], D)
    assert invert_unit(PowerSeries.one(q2, D)) == PowerSeries.one(q2, D)
    assert invert_unit(series(q2, [1, 2], D)) == series(q2, [(-2) ** i for i in range(D + 1)], D)


def test_invert_unit_rejects_non_units(q2) -> None:
    with pytest.raises(NotUnit):
        invert_unit(series(q2, [2, 1], 4))


def test_invert_unit_random(preset, rng) -> None:
    g = random_series(preset, rng, 12)
    g = PowerSeries(preset, (1 + OElement.pi(preset) * g[0],) + g.coeffs[1:])
    assert g * invert_unit(g) == PowerSeries.one(preset, 12)


def test_exact_divide_examples(q2) -> None:
    f = series(q2, [0, 2, 1], 6)
    T = PowerSeries.variable(q2, 6)
    assert exact_divide(f, T) == series(q2, [2, 1], 5)
    assert exact_divide(PowerSeries.monomial(q2, 3, 6), T) == PowerSeries.monomial(q2, 2, 5)
    with pytest.raises(NotDivisible):
        exact_divide(series(q2, [1, 1], 6), T)


def test_exact_divide_recovers_factor(preset, rng) -> None:
    D = 12
    h = random_series(preset, rng, D)
    unit = random_series(preset, rng, D)
    unit = PowerSeries(preset, (OElement.one(preset),) + unit.coeffs[1:])
    t_cubed = PowerSeries.monomial(preset, 3, D)
    assert exact_divide(t_cubed * unit * h, t_cubed * unit) == h.truncate(D - 3)


def test_reductions_examples(q2, q3) -> None:
    reduced = reductions(series(q2, [0, 2, 1], 4))
    assert reduced.residues.as_lists() == [[0], [0], [1], [0], [0]]
    assert reduced.t_valuation == 1
    assert not reduced.caveat

    zero = reductions(series(q2, [0, 2, 1], 4) * OElement.pi(q2)).residues
    assert zero.t_valuation() == 5

    cubic = reductions(series(q3, [0, 3, 0, 1], 4)).residues
    assert cubic.t_valuation() == 3


def test_reductions_of_exact_zero_have_no_caveat(q2) -> None:
    reduced = reductions(PowerSeries.zero(q2, 4))
    assert reduced.t_valuation == 5
    assert not reduced.caveat


def test_reductions_flag_zero_at_precision(q2) -> None:
    vanishing = OElement.zero(q2).div_pi_exact(1)
    reduced = reductions(series(q2, [vanishing, 0, 1], 4))
    assert reduced.t_valuation == 2
    assert reduced.caveat

    tail = reductions(series(q2, [0, 0, vanishing], 2))
    assert tail.t_valuation == 3
    assert tail.caveat


def test_div_pi_coefficientwise(q2_ramified) -> None:
    pi = OElement.pi(q2_ramified)
    g = series(q2_ramified, [2, 2, 0, 2])
    assert g.div_pi() == PowerSeries.from_coeffs(q2_ramified, [pi, pi, 0, pi], 3)


def test_evaluate_matches_sympy(q3) -> None:
    T = Symbol("T")
    poly = Poly(expand((1 + T) ** 5 - 1), T)
    coeffs = [int(c) for c in reversed(poly.all_coeffs())]
    assert series(q3, coeffs).evaluate(2) == 3 ** 5 - 1


def test_bivariate_specialize_and_substitute(q2) -> None:
    D = 6
    law = BivariateSeries.from_terms(q2, D, {(1, 0): 1, (0, 1): 1, (1, 1): 1})
    T = PowerSeries.variable(q2, D)
    # X + Y + XY at (T, T) is (1+T)^2 - 1
    assert law.specialize(T, T) == series(q2, [0, 2, 1], D)
    assert law.is_symmetric()
    assert law.restrict_x() == PowerSeries.variable(q2, D, "X")
    X = BivariateSeries.from_terms(q2, D, {(1, 0): 1})
    Y = BivariateSeries.from_terms(q2, D, {(0, 1): 1})
    assert law.substitute(X, Y) == law
