"""
Degree-by-degree solvers for Lubin–Tate group laws and endomorphisms.

Both solvers work at the field precision plus guard digits on residue
representatives, and attach a certified precision to the result: the full
field precision when f is exact data, and the input precision less
`loss_bound` digits when f is itself only known modulo p^M.
"""
from __future__ import annotations

import logging
from typing import Dict, List, Optional, Sequence, Union

from pitypical.errors import DivisionObstruction, NotDivisible, OutOfRange, PrecisionExhausted
from pitypical.services.field import LocalFieldSpec, OElement
from pitypical.services.field.precision import escalate, guard_digits
from pitypical.services.series import BivariateSeries, PowerSeries, compose

from .frobenius import FrobeniusSeries

logger = logging.getLogger(__name__)

Component = List[OElement]


def _representative(value: OElement) -> OElement:
    # residues mod p^W stand in for the value; certified_precision bounds their error
    return value.with_spec(value.spec, exact=True)


def loss_bound(spec: LocalFieldSpec, D: int) -> int:
    """
    p-digits an error in f can cost a degree-D solve.

    Each degree divides by π once, and an error in degree r reaches a later
    degree without a compensating factor of π only at degree q·r, so the
    π-adic loss is one digit plus one per q-fold step up to D.
    """
    steps, degree = 1, spec.q
    while degree <= D:
        steps += 1
        degree *= spec.q
    return -(-steps // spec.e)


def certified_precision(frobenius: FrobeniusSeries, D: int) -> int:
    """p-precision the solvers can vouch for when f is known to degree D."""
    spec = frobenius.spec
    if frobenius.exact or frobenius.builder is not None:
        return spec.M
    known = min(c.valid_prec for c in frobenius.series.truncate(min(D, frobenius.D)).coeffs)
    precision = min(spec.M, known - loss_bound(spec, D))
    if precision < 2:
        raise PrecisionExhausted(
            f"f is known mod p^{known}; a degree-{D} solve cannot certify two digits"
        )
    return precision


def report_at(spec: LocalFieldSpec, precision: int) -> LocalFieldSpec:
    """The field at ``precision``; moving a result through it caps valid_prec."""
    return spec.with_precision(min(precision, spec.M))


def working_spec(spec: LocalFieldSpec, guard: int) -> LocalFieldSpec:
    return spec.with_precision(spec.M + guard)


def series_powers(series: PowerSeries, top: int) -> List[PowerSeries]:
    """[series^0, ..., series^top], all at the truncation of ``series``."""
    powers = [PowerSeries.one(series.spec, series.D, series.var)]
    for _ in range(top):
        powers.append(powers[-1] * series)
    return powers


def correction(difference: OElement, degree: int) -> OElement:
    """difference / (π − π^degree), as one exact π-division and one unit inversion."""
    spec = difference.spec
    unit = (1 - OElement.pi(spec) ** (degree - 1)).inverse()
    try:
        quotient = difference.div_pi_exact(1)
    except NotDivisible as exc:
        raise DivisionObstruction(f"degree {degree} correction is not divisible by π") from exc
    return _representative(quotient * unit)


def _check_degree(frobenius: FrobeniusSeries, D: int) -> None:
    if D < 2:
        raise OutOfRange(f"truncation degree must be at least 2, got {D}")
    if D > frobenius.D and frobenius.builder is None:
        raise OutOfRange(f"f is only known to degree {frobenius.D}, cannot solve to {D}")


# -- group law ----------------------------------------------------------------


def _accumulate(target: Component, component: Sequence[OElement], scalar: Optional[OElement] = None) -> None:
    for index, value in enumerate(component):
        if value.is_exact_zero():
            continue
        target[index] = target[index] + (value * scalar if scalar is not None else value)


def _homogeneous_product(left: Sequence[OElement], right: Sequence[OElement], zero: OElement) -> Component:
    out = [zero] * (len(left) + len(right) - 1)
    for i, a in enumerate(left):
        if a.is_exact_zero():
            continue
        for j, b in enumerate(right):
            if not b.is_exact_zero():
                out[i + j] = out[i + j] + a * b
    return out


def build_group_law(frobenius: FrobeniusSeries, D: int) -> BivariateSeries:
    """The unique F ≡ X + Y mod degree 2 with f(F(X,Y)) = F(f(X), f(Y)) up to total degree D."""
    _check_degree(frobenius, D)
    precision = certified_precision(frobenius, D)
    return escalate(lambda guard: _solve_group_law(frobenius, D, guard, precision), guard_digits(D))


def _solve_group_law(frobenius: FrobeniusSeries, D: int, guard: int, precision: int) -> BivariateSeries:
    spec = frobenius.spec
    work = working_spec(spec, guard)
    f = frobenius.at(work, D)
    zero, one = OElement.zero(work), OElement.one(work)

    f_terms = [(m, f[m]) for m in range(2, D + 1) if not f[m].is_exact_zero()]
    top = max((m for m, _ in f_terms), default=1)
    f_powers = series_powers(f, D)

    # components[d][i] is the coefficient of X^i Y^(d-i)
    components: List[Component] = [[zero], [one, one]]
    powers: Dict[int, Dict[int, Component]] = {m: {} for m in range(2, top + 1)}

    def power_component(m: int, d: int) -> Optional[Component]:
        if m == 1:
            return components[d]
        if d < m:
            return None
        return powers[m][d]

    for r in range(2, D + 1):
        for m in range(2, min(r, top) + 1):
            acc = [zero] * (r + 1)
            for s in range(1, r - m + 2):
                other = power_component(m - 1, r - s)
                if other is not None:
                    _accumulate(acc, _homogeneous_product(components[s], other, zero))
            powers[m][r] = acc

        # degree-r part of f(F_{<r}) beyond the linear term
        outer = [zero] * (r + 1)
        for m, c in f_terms:
            if m <= r:
                _accumulate(outer, powers[m][r], c)

        # degree-r part of F_{<r}(f(X), f(Y))
        inner = [zero] * (r + 1)
        for s in range(1, r):
            for i, coeff in enumerate(components[s]):
                if coeff.is_exact_zero():
                    continue
                fx, fy = f_powers[i], f_powers[s - i]
                for u in range(i, r - (s - i) + 1):
                    a, b = fx[u], fy[r - u]
                    if a.is_exact_zero() or b.is_exact_zero():
                        continue
                    inner[u] = inner[u] + coeff * a * b

        components.append([correction(x - y, r) for x, y in zip(inner, outer)])

    logger.debug("Solved group law to total degree %s with %s guard digits", D, guard)
    law = BivariateSeries.from_homogeneous(work, D, components)
    return law.with_spec(report_at(spec, precision)).with_spec(spec)


# -- endomorphisms ------------------------------------------------------------


def build_endomorphism(
    frobenius: FrobeniusSeries, a: Union[OElement, int], D: int
) -> PowerSeries:
    """The unique [a] ≡ aT mod degree 2 commuting with f up to degree D."""
    _check_degree(frobenius, D)
    if isinstance(a, int):
        a = OElement.from_int(frobenius.spec, a)
    precision = certified_precision(frobenius, D)
    if a.valid_prec < frobenius.spec.M:
        precision = min(precision, a.valid_prec - loss_bound(frobenius.spec, D))
        if precision < 2:
            raise PrecisionExhausted(f"a is known mod p^{a.valid_prec}; cannot certify [a] to degree {D}")
    return escalate(lambda guard: _solve_endomorphism(frobenius, a, D, guard, precision), guard_digits(D))


def _solve_endomorphism(
    frobenius: FrobeniusSeries, a: OElement, D: int, guard: int, precision: int
) -> PowerSeries:
    spec = frobenius.spec
    work = working_spec(spec, guard)
    f = frobenius.at(work, D)
    zero = OElement.zero(work)

    f_terms = [(m, f[m]) for m in range(2, D + 1) if not f[m].is_exact_zero()]
    top = max((m for m, _ in f_terms), default=1)
    f_powers = series_powers(f, D)

    coeffs: List[OElement] = [zero, a.with_spec(work, exact=True)]
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

        outer = zero
        for m, c in f_terms:
            if m <= r:
                outer = outer + c * powers[m][r]
        inner = zero
        for s in range(1, r):
            b = f_powers[s][r]
            if not coeffs[s].is_exact_zero() and not b.is_exact_zero():
                inner = inner + coeffs[s] * b
        coeffs.append(correction(inner - outer, r))

    series = PowerSeries(work, tuple(coeffs))
    return series.with_spec(report_at(spec, precision)).with_spec(spec)


def iterate_pi(frobenius: FrobeniusSeries, n: int, D: int) -> PowerSeries:
    """[π^n] = f∘…∘f (n times); [π^0] = T."""
    if n < 0:
        raise OutOfRange(f"n must be non-negative, got {n}")
    if D > frobenius.D and frobenius.builder is None:
        raise OutOfRange(f"f is only known to degree {frobenius.D}, cannot iterate to {D}")
    f = frobenius.at(frobenius.spec, D)
    result = PowerSeries.variable(frobenius.spec, D)
    for _ in range(n):
        result = compose(f, result)
    return result
