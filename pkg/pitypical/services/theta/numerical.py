from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Tuple, Union

from pitypical.errors import IntegralityFailure, NotDivisible, OutOfRange
from pitypical.services.field import LaurentScalar, LocalFieldSpec, OElement
from pitypical.services.field.precision import escalate
from pitypical.services.series import PowerSeries

logger = logging.getLogger(__name__)

Point = Union[OElement, int]


@dataclass(frozen=True)
class ThetaPolynomial:
    """θ_k as a polynomial of degree q^k with coefficients in L."""

    k: int
    poly: PowerSeries

    @property
    def spec(self) -> LocalFieldSpec:
        return self.poly.spec

    def degree(self) -> int:
        return self.poly.degree()

    def leading_coefficient(self) -> LaurentScalar:
        return self.poly[self.poly.D]

    def evaluate(self, point: Point) -> LaurentScalar:
        return self.poly.evaluate(point)


def denominator_bound(q: int, k: int) -> int:
    """
    A priori bound on the π-exponent of the denominators of θ_k:
    D_k = k + max(0, max_{i<k} (q^{k-i} D_i − i)).
    """
    bounds = [0]
    for j in range(1, k + 1):
        bounds.append(j + max([0] + [q ** (j - i) * bounds[i] - i for i in range(j)]))
    return bounds[k]


def theta_guard(spec: LocalFieldSpec, k: int) -> int:
    d_k = denominator_bound(spec.q, k)
    return 2 * -(-d_k // spec.e) + 2 * k + 4


@lru_cache(maxsize=64)
def theta_family(spec: LocalFieldSpec, k: int) -> Tuple[ThetaPolynomial, ...]:
    """θ_0, ..., θ_k at the precision of ``spec``; θ_0 = T."""
    if k < 0:
        raise OutOfRange(f"k must be non-negative, got {k}")
    pi = OElement.pi(spec)
    family: List[PowerSeries] = [PowerSeries.variable(spec, 1).to_laurent()]
    for j in range(1, k + 1):
        D = spec.q ** j
        total = PowerSeries.zero(spec, D, laurent=True)
        for i, theta_i in enumerate(family):
            padded = PowerSeries.from_coeffs(spec, theta_i.coeffs, D, laurent=True)
            total = total + (padded ** (spec.q ** (j - i))).scale(pi ** i)
        total = total - PowerSeries.variable(spec, D)
        family.append((-total).div_pi(j))
    logger.debug("Computed θ_0..θ_%s over %s", k, spec.describe())
    return tuple(ThetaPolynomial(index, poly) for index, poly in enumerate(family))


def theta_poly(spec: LocalFieldSpec, k: int) -> ThetaPolynomial:
    """θ_k with coefficients reported at the precision of ``spec``."""

    def compute(guard: int) -> ThetaPolynomial:
        work = spec.with_precision(spec.M + guard)
        theta = theta_family(work, k)[k]
        return ThetaPolynomial(k, theta.poly.with_spec(spec))

    return escalate(compute, theta_guard(spec, k))


def _lift_point(spec: LocalFieldSpec, point: Point) -> OElement:
    if isinstance(point, int):
        return OElement.from_int(spec, point)
    return point.with_spec(spec, exact=True)


def theta_value(spec: LocalFieldSpec, k: int, point: Point) -> LaurentScalar:
    """θ_k(a) by Horner over L; sample points are exact."""

    def compute(guard: int) -> LaurentScalar:
        work = spec.with_precision(spec.M + guard)
        value = theta_family(work, k)[k].evaluate(_lift_point(work, point))
        if value.is_integral() is None:
            value = LaurentScalar(value.to_integral())
        return value.with_spec(spec)

    return escalate(compute, theta_guard(spec, k))


def theta_value_recursive(spec: LocalFieldSpec, k: int, point: Point) -> OElement:
    """
    θ_k(a) from the values θ_i(a), i < k, with one exact π^k division per level.

    Raises IntegralityFailure when some level is not divisible.
    """

    def compute(guard: int) -> OElement:
        work = spec.with_precision(spec.M + guard)
        a = _lift_point(work, point)
        pi = OElement.pi(work)
        values = [a]
        for j in range(1, k + 1):
            total = sum(
                (pi ** i * v ** (spec.q ** (j - i)) for i, v in enumerate(values)),
                OElement.zero(work),
            )
            try:
                values.append(-(total - a).div_pi_exact(j))
            except NotDivisible as exc:
                raise IntegralityFailure(f"θ_{j}(a) is not integral") from exc
        return values[k].with_spec(spec)

    return escalate(compute, theta_guard(spec, k))
