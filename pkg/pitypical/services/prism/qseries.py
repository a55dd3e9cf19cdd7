from __future__ import annotations

import logging

from sympy import Poly, Symbol, cyclotomic_poly

from pitypical.errors import OutOfRange, SpecMismatch
from pitypical.services.field import LocalFieldSpec, OElement
from pitypical.services.lubin_tate import FrobeniusSeries, iterate_pi, validate_frobenius_series
from pitypical.services.series import PowerSeries, compose

logger = logging.getLogger(__name__)

_T = Symbol("T")


def frobenius_at(frobenius: FrobeniusSeries, D: int) -> PowerSeries:
    if D > frobenius.D and frobenius.builder is None:
        raise OutOfRange(f"f is only known to degree {frobenius.D}, need {D}")
    return frobenius.at(frobenius.spec, D)


def q_one(frobenius: FrobeniusSeries, D: int) -> PowerSeries:
    """g = f/T truncated at D."""
    return frobenius_at(frobenius, D + 1).shift_down(1)


def compute_qn(frobenius: FrobeniusSeries, n: int, D: int) -> PowerSeries:
    """q_n = g∘[π^{n−1}] with g = f/T."""
    if n < 1:
        raise OutOfRange(f"n must be at least 1, got {n}")
    g = q_one(frobenius, D)
    if n == 1:
        return g
    logger.debug("Composing q_1 with [π^%s] to degree %s", n - 1, D)
    return compose(g, iterate_pi(frobenius, n - 1, D))


def cofactor_seed(frobenius: FrobeniusSeries, D: int) -> PowerSeries:
    """f̃ with π = q_1(T) + T·f̃(T)."""
    spec = frobenius.spec
    q1 = q_one(frobenius, D + 1)
    pi = PowerSeries.from_coeffs(spec, [OElement.pi(spec)], q1.D)
    return (pi - q1).shift_down(1)


def cyclotomic_frobenius(spec: LocalFieldSpec, D: int) -> FrobeniusSeries:
    """f = (1+T)^p − 1 over a spec with π = p."""
    if (spec.e, spec.f) != (1, 1) or OElement.pi(spec) != spec.p:
        raise SpecMismatch("the cyclotomic series needs Q_p presented with π = p")
    poly = Poly((1 + _T) ** spec.p - 1, _T)
    return validate_frobenius_series(
        _from_poly(spec, poly, D),
        spec,
        exact=True,
        builder=lambda target, degree: _from_poly(target, poly, degree),
    )


def cyclotomic_qn(spec: LocalFieldSpec, n: int, D: int) -> PowerSeries:
    """Φ_{p^n}(1+T) truncated at D."""
    x = Symbol("x")
    poly = Poly(cyclotomic_poly(spec.p ** n, x).subs(x, 1 + _T).expand(), _T)
    return _from_poly(spec, poly, D)


def _from_poly(spec: LocalFieldSpec, poly: Poly, D: int) -> PowerSeries:
    coeffs = [0] * (D + 1)
    for (degree,), c in zip(poly.monoms(), poly.coeffs()):
        if degree <= D:
            coeffs[degree] = int(c)
    return PowerSeries.from_coeffs(spec, coeffs, D)
