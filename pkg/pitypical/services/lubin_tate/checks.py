from __future__ import annotations

import logging
import math
from typing import List, Optional, Tuple, Union

from pitypical.services.checks import CheckResult
from pitypical.services.field import OElement, Residue
from pitypical.services.field.precision import guard_digits
from pitypical.services.series import BivariateSeries, PowerSeries, compose, reductions

from .frobenius import FrobeniusSeries
from .models import FormalGroupModel
from .solver import build_endomorphism

logger = logging.getLogger(__name__)


def reduce_group_law(law: BivariateSeries) -> Tuple[Tuple[Residue, ...], ...]:
    """Coefficientwise image of F over k_L."""
    return law.reduce_mod_pi()


def height(frobenius: FrobeniusSeries, D: int) -> Tuple[int, Optional[int]]:
    """
    T-adic valuation of [p] mod π and the Z_p-height it witnesses.

    The height is None when the valuation is not a power of p or exceeds D.
    """
    spec = frobenius.spec
    series = build_endomorphism(frobenius, spec.p, D)
    residues = reductions(series).residues
    valuation = residues.t_valuation()
    if valuation > D:
        return valuation, None
    exponent = round(math.log(valuation, spec.p))
    return valuation, exponent if spec.p ** exponent == valuation else None


def commutativity_check(law: BivariateSeries) -> CheckResult:
    return CheckResult("commutativity", law.is_symmetric(), {"D": law.D})


def unit_check(law: BivariateSeries) -> CheckResult:
    x_only = law.restrict_x()
    y_only = law.restrict_y()
    passed = x_only == PowerSeries.variable(law.spec, law.D, "X") and y_only == PowerSeries.variable(
        law.spec, law.D, "Y"
    )
    return CheckResult("strict-unit", passed, {"D": law.D})


def associativity_check(law: BivariateSeries, third: BivariateSeries) -> CheckResult:
    """
    F(F(X,Y), W) = F(X, F(Y, W)) for a bivariate W vanishing at the origin.

    Compared at total degree ⌊D/2⌋ so both sides are free of truncation effects.
    """
    D = max(law.D // 2, 1)
    F = law.truncate(D)
    W = third.truncate(D)
    X = BivariateSeries.from_terms(law.spec, D, {(1, 0): 1})
    Y = BivariateSeries.from_terms(law.spec, D, {(0, 1): 1})
    left = F.substitute(F, W)
    right = F.substitute(X, F.substitute(Y, W))
    return CheckResult("associativity", left == right, {"D": D})


def equivariance_check(law: BivariateSeries, frobenius: FrobeniusSeries) -> CheckResult:
    """f(F(X,Y)) = F(f(X), f(Y)) up to the truncation of F."""
    spec, D = law.spec, law.D
    f = frobenius.at(spec, D)
    fx = BivariateSeries.from_univariate(f, "X", D)
    fy = BivariateSeries.from_univariate(f, "Y", D)
    left = fx.substitute(law, BivariateSeries.zero(spec, D))
    right = law.substitute(fx, fy)
    return CheckResult("f-equivariance", left == right, {"D": D})


def endomorphism_checks(
    model: FormalGroupModel,
    a: Union[OElement, int],
    b: Union[OElement, int],
    D: Optional[int] = None,
) -> List[CheckResult]:
    """Linear term, [a]∘[b] = [ab], [a+b] = F([a], [b]) and log([a]) = a·log for a pair of scalars."""
    spec = model.spec
    a = OElement.from_int(spec, a) if isinstance(a, int) else a
    b = OElement.from_int(spec, b) if isinstance(b, int) else b
    D = min(D or model.law.D, model.law.D, model.log.D)

    # [a] depends on a beyond p^M, so ab and a+b are formed from the exact representatives
    wide = spec.with_precision(spec.M + 2 * guard_digits(D))
    a_wide, b_wide = a.with_spec(wide, exact=True), b.with_spec(wide, exact=True)

    end_a = build_endomorphism(model.frobenius, a, D)
    end_b = build_endomorphism(model.frobenius, b, D)
    end_ab = build_endomorphism(model.frobenius, a_wide * b_wide, D)
    end_sum = build_endomorphism(model.frobenius, a_wide + b_wide, D)

    results = [
        CheckResult("linear-term", end_a[1] == a and end_a[0].is_zero(), {"D": D}),
        CheckResult("composition", compose(end_a, end_b) == end_ab, {"D": D}),
        CheckResult(
            "additivity",
            model.law.truncate(D).specialize(end_a, end_b) == end_sum,
            {"D": D},
        ),
    ]
    log = model.log.truncate(D)
    results.append(CheckResult("log-equivariance", compose(log, end_a) == log.scale(a), {"D": D}))
    for result in results:
        if not result.passed:
            logger.warning("Endomorphism check %s failed over %s", result.name, spec.describe())
    return results
