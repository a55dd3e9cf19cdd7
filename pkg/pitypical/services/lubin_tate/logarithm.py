from __future__ import annotations

import logging
from typing import Dict, List, Optional

from pitypical.errors import BadFrobeniusReduction, IntegralityFailure, OutOfRange
from pitypical.services.field import LaurentScalar, LocalFieldSpec, OElement
from pitypical.services.field.precision import escalate, guard_digits
from pitypical.services.series import PowerSeries

from .frobenius import FrobeniusSeries, validate_frobenius_series
from .solver import (
    _check_degree,
    _representative,
    certified_precision,
    report_at,
    series_powers,
    working_spec,
)

logger = logging.getLogger(__name__)


def logarithm(frobenius: FrobeniusSeries, D: int) -> PowerSeries:
    """log ≡ T mod degree 2 with log(f(T)) = π·log(T), as a series over L."""
    _check_degree(frobenius, D)
    logger.debug("Solving the logarithm to degree %s", D)
    precision = certified_precision(frobenius, D)
    return escalate(lambda guard: _solve_logarithm(frobenius, D, guard, precision), guard_digits(D))


def _solve_logarithm(frobenius: FrobeniusSeries, D: int, guard: int, precision: int) -> PowerSeries:
    spec = frobenius.spec
    work = working_spec(spec, guard)
    f = frobenius.at(work, D)
    f_powers = series_powers(f, D)
    pi = OElement.pi(work)

    coeffs: List[LaurentScalar] = [LaurentScalar.zero(work), LaurentScalar.one(work)]
    for r in range(2, D + 1):
        acc = LaurentScalar.zero(work)
        for m in range(1, r):
            c, b = coeffs[m], f_powers[m][r]
            if c.is_zero() or b.is_exact_zero():
                continue
            acc = acc + c * b
        value = (acc * (1 - pi ** (r - 1)).inverse()).div_pi(1)
        coeffs.append(LaurentScalar(_representative(value.num), value.denom_exp))
    log = PowerSeries(work, tuple(coeffs), laurent=True)
    return log.with_spec(report_at(spec, precision)).with_spec(spec)


def honda_logarithm(spec: LocalFieldSpec, D: int) -> PowerSeries:
    """Σ_k π^{-k} T^{q^k} truncated at D."""
    coeffs = [LaurentScalar.zero(spec)] * (D + 1)
    k, degree = 0, 1
    while degree <= D:
        coeffs[degree] = LaurentScalar(OElement.one(spec), k)
        k, degree = k + 1, degree * spec.q
    return PowerSeries(spec, tuple(coeffs), laurent=True)


def series_from_logarithm(log: PowerSeries, a: OElement, D: Optional[int] = None) -> PowerSeries:
    """
    The P ≡ aT mod degree 2 with log(P) = a·log(T), required to be integral.

    ``log`` must be known exactly (its coefficients are lifted to the working
    precision as exact data).
    """
    D = log.D if D is None else D
    if D > log.D:
        raise OutOfRange(f"logarithm is only known to degree {log.D}")
    return escalate(lambda guard: _solve_from_logarithm(log, a, D, guard), guard_digits(D))


def _solve_from_logarithm(log: PowerSeries, a: OElement, D: int, guard: int) -> PowerSeries:
    spec = log.spec
    work = working_spec(spec, guard)
    c = log.truncate(D).with_spec(work, exact=True)
    zero = OElement.zero(work)
    a = a.with_spec(work, exact=True)

    terms = [(m, c[m]) for m in range(2, D + 1) if not c[m].is_exact_zero()]
    top = max((m for m, _ in terms), default=1)
    coeffs: List[OElement] = [zero, a]
    powers: Dict[int, Dict[int, OElement]] = {m: {} for m in range(2, top + 1)}

    def power_coefficient(m: int, d: int) -> Optional[OElement]:
        if m == 1:
            return coeffs[d]
        if d < m:
            return None
        return powers[m][d]

    for r in range(2, D + 1):
        for m in range(2, min(r, top) + 1):
            acc = zero
            for s in range(1, r - m + 2):
                other = power_coefficient(m - 1, r - s)
                if other is not None and not coeffs[s].is_exact_zero():
                    acc = acc + coeffs[s] * other
            powers[m][r] = acc

        value = c[r] * a
        for m, cm in terms:
            if m <= r:
                value = value - cm * powers[m][r]
        try:
            coeffs.append(_representative(value.to_integral()))
        except IntegralityFailure as exc:
            raise IntegralityFailure(f"coefficient of T^{r} is not integral") from exc

    return PowerSeries(work, tuple(coeffs)).with_spec(spec)


def honda_pi_series(spec: LocalFieldSpec, D: int) -> PowerSeries:
    """[π] of the Honda law, exp(π·log T) for log = Σ π^{-k} T^{q^k}."""
    return series_from_logarithm(honda_logarithm(spec, D), OElement.pi(spec), D)


def honda_frobenius(spec: LocalFieldSpec, D: int) -> FrobeniusSeries:
    series = honda_pi_series(spec, D)
    try:
        return validate_frobenius_series(series, spec, builder=honda_pi_series)
    except BadFrobeniusReduction as exc:
        raise IntegralityFailure(f"Honda [π] fails the Frobenius congruence: {exc}") from exc
