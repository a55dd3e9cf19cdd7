from __future__ import annotations

import logging
from typing import Iterable, List

from pitypical.errors import IntegralityFailure, PrecisionExhausted
from pitypical.services.checks import CheckResult
from pitypical.services.field import LaurentScalar, LocalFieldSpec, OElement
from pitypical.services.series import PowerSeries
from pitypical.utils.serialization import element_to_dict, laurent_to_dict

from .numerical import Point, theta_family, theta_guard, theta_poly, theta_value, theta_value_recursive

logger = logging.getLogger(__name__)


def _point_json(spec: LocalFieldSpec, point: Point) -> dict:
    if isinstance(point, int):
        point = OElement.from_int(spec, point)
    return element_to_dict(point)


def theta_eval_check(spec: LocalFieldSpec, k: int, samples: Iterable[Point]) -> CheckResult:
    """θ_k(a) is integral for every sample and agrees with the recursive evaluation."""
    failures: List[dict] = []
    values: List[dict] = []
    checked = 0
    for point in samples:
        checked += 1
        try:
            value = theta_value(spec, k, point)
        except PrecisionExhausted as exc:
            failures.append({"point": _point_json(spec, point), "error": str(exc)})
            continue
        if value.is_integral() is not True:
            failures.append({"point": _point_json(spec, point), "value": laurent_to_dict(value)})
            continue
        try:
            oracle = theta_value_recursive(spec, k, point)
        except IntegralityFailure as exc:
            failures.append({"point": _point_json(spec, point), "error": str(exc)})
            continue
        if value.num != oracle:
            failures.append(
                {
                    "point": _point_json(spec, point),
                    "value": laurent_to_dict(value),
                    "recursive": element_to_dict(oracle),
                }
            )
            continue
        values.append({"point": _point_json(spec, point), "value": element_to_dict(value.num)})

    if failures:
        logger.warning("θ_%s failed integrality at %s of %s points", k, len(failures), checked)
    return CheckResult(
        f"theta-{k}-integral",
        not failures,
        {"k": k, "samples": checked, "failures": failures, "values": values},
    )


def frobenius_identity_check(spec: LocalFieldSpec, samples: Iterable[Point]) -> CheckResult:
    """T^q + π θ_1(T) = T as polynomials, and a^q + π θ_1(a) = a, a^q ≡ a mod π on samples."""
    theta_1 = theta_poly(spec, 1).poly
    pi = OElement.pi(spec)
    lhs = PowerSeries.monomial(spec, spec.q, spec.q).to_laurent() + theta_1.scale(pi)
    polynomial_ok = lhs == PowerSeries.variable(spec, spec.q)

    failures: List[dict] = []
    checked = 0
    for point in samples:
        checked += 1
        a = OElement.from_int(spec, point) if isinstance(point, int) else point
        value = theta_value(spec, 1, a)
        if a ** spec.q + value * pi != a or (a ** spec.q - a).val_pi() < 1:
            failures.append({"point": element_to_dict(a)})
    return CheckResult(
        "frobenius-identity",
        polynomial_ok and not failures,
        {"polynomial_identity": polynomial_ok, "samples": checked, "failures": failures},
    )


def recursion_identity_check(spec: LocalFieldSpec, k: int) -> CheckResult:
    """Σ_{i≤k} π^i θ_i(T)^{q^{k−i}} = T as an identity of polynomials."""
    work = spec.with_precision(spec.M + theta_guard(spec, k))
    family = theta_family(work, k)
    pi = OElement.pi(work)
    D = spec.q ** k
    total = PowerSeries.zero(work, D, laurent=True)
    for i, theta in enumerate(family):
        padded = PowerSeries.from_coeffs(work, theta.poly.coeffs, D, laurent=True)
        total = total + (padded ** (spec.q ** (k - i))).scale(pi ** i)
    passed = total.with_spec(spec) == PowerSeries.variable(spec, D)
    return CheckResult(f"theta-{k}-recursion", passed, {"k": k})


def leading_coefficient_check(spec: LocalFieldSpec, k: int) -> CheckResult:
    """
    deg θ_k = q^k with leading coefficient −π^{-k} Σ_{i<k} π^i lc(θ_i)^{q^{k−i}}.
    """
    work = spec.with_precision(spec.M + theta_guard(spec, k))
    family = theta_family(work, k)
    pi = OElement.pi(work)
    leads = [theta.leading_coefficient() for theta in family]
    passed = all(not lead.is_zero() for lead in leads)
    passed = passed and all(theta.poly.D == spec.q ** theta.k for theta in family)
    for j in range(1, k + 1):
        expected = LaurentScalar.zero(work)
        for i in range(j):
            expected = expected + leads[i] ** (spec.q ** (j - i)) * pi ** i
        expected = -expected.div_pi(j)
        passed = passed and leads[j] == expected
    return CheckResult(
        f"theta-{k}-leading",
        passed,
        {"k": k, "leading": laurent_to_dict(leads[k].with_spec(spec))},
    )
