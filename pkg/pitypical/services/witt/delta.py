from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Generic, Iterable, Optional, Tuple, TypeVar

from pitypical.errors import NotDivisible, PrecisionExhausted
from pitypical.services.checks import CheckResult
from pitypical.services.lubin_tate import FrobeniusSeries
from pitypical.services.lubin_tate.frobenius import frobenius_polynomial
from pitypical.services.series import PowerSeries, compose

from .carriers import Carrier, ElementCarrier, SeriesCarrier
from .vectors import WittPair, bracket, witt_add, witt_mul

logger = logging.getLogger(__name__)

T = TypeVar("T")


@dataclass(frozen=True)
class DeltaOperator(Generic[T]):
    """
    A Frobenius lift φ on a carrier; δ(a) = (φ(a) − a^q)/π is derived from it.
    """

    carrier: Carrier[T]
    lift: Callable[[T], T] = field(compare=False)
    label: str = "custom"

    def __call__(self, value: T) -> T:
        return delta_apply(self, value)

    def section(self, value: T) -> WittPair[T]:
        """a ↦ (a, δ(a))."""
        return WittPair(self.carrier, value, delta_apply(self, value))


def delta_apply(delta: DeltaOperator[T], value: T) -> T:
    carrier = delta.carrier
    value = carrier.coerce(value)
    difference = delta.lift(value) - carrier.q_power(value)
    try:
        return carrier.div_pi(difference)
    except NotDivisible as exc:
        raise NotDivisible(f"φ(a) ≢ a^q mod π for a = {carrier.to_json(value)}") from exc


def identity_delta(carrier: ElementCarrier) -> DeltaOperator:
    """φ = identity on o_L, a lift because a^q ≡ a mod π."""
    return DeltaOperator(carrier, lambda value: value, "identity")


def canonical_delta(frobenius: FrobeniusSeries, D: int) -> DeltaOperator[PowerSeries]:
    """δ_L on o_L[[T]]: φ fixes o_L and sends T to [π](T) = f."""
    carrier = SeriesCarrier(frobenius.spec, D)
    f = frobenius.at(frobenius.spec, D)
    logger.debug("Canonical δ on o_L[[T]] truncated at degree %s", D)
    return DeltaOperator(carrier, lambda g: compose(g, f), "canonical")


def _counterexample(carrier: Carrier, a: Any, b: Any) -> dict:
    return {"a": carrier.to_json(a), "b": carrier.to_json(b)}


def section_check(delta: DeltaOperator[T], samples: Iterable[Tuple[T, T]]) -> CheckResult:
    """
    a ↦ (a, δ(a)) preserves +_W and ×_W on every sample pair.

    Equivalent to δ(a+b) = δa + δb + ⟨a,b⟩_q/π and
    δ(ab) = a^q δb + b^q δa + π δa δb.
    """
    carrier = delta.carrier
    checked = 0
    for a, b in samples:
        try:
            sa, sb = delta.section(a), delta.section(b)
            if witt_add(sa, sb) != delta.section(a + b):
                return CheckResult("section-add", False, _counterexample(carrier, a, b))
            if witt_mul(sa, sb) != delta.section(a * b):
                return CheckResult("section-mul", False, _counterexample(carrier, a, b))
        except (NotDivisible, PrecisionExhausted) as exc:
            details = _counterexample(carrier, a, b)
            details["error"] = str(exc)
            return CheckResult("section", False, details)
        checked += 1
    return CheckResult("section", True, {"samples": checked, "lift": delta.label})


def derived_rules_check(delta: DeltaOperator[T], samples: Iterable[Tuple[T, T]]) -> CheckResult:
    """The sum and product rules for δ, evaluated directly."""
    carrier = delta.carrier
    checked = 0
    for a, b in samples:
        da, db = delta(a), delta(b)
        expected_sum = da + db + carrier.div_pi(bracket(carrier, a, b))
        if delta(a + b) != expected_sum:
            return CheckResult("delta-sum-rule", False, _counterexample(carrier, a, b))
        expected_product = (
            carrier.q_power(a) * db + carrier.q_power(b) * da + carrier.pi_times(da * db)
        )
        if delta(a * b) != expected_product:
            return CheckResult("delta-product-rule", False, _counterexample(carrier, a, b))
        checked += 1
    return CheckResult("delta-rules", True, {"samples": checked, "lift": delta.label})


def lift_reconstruction_check(delta: DeltaOperator[T], samples: Iterable[T]) -> CheckResult:
    """φ(g) = g^q + π δ(g) on every sample."""
    carrier = delta.carrier
    checked = 0
    for g in samples:
        if delta.lift(g) != carrier.q_power(g) + carrier.pi_times(delta(g)):
            return CheckResult("lift-reconstruction", False, {"g": carrier.to_json(g)})
        checked += 1
    return CheckResult("lift-reconstruction", True, {"samples": checked, "lift": delta.label})


def delta_of_one_check(delta: DeltaOperator[T]) -> CheckResult:
    value: Optional[T] = delta(delta.carrier.one())
    return CheckResult("delta-one", value == delta.carrier.zero(), {"lift": delta.label})


def delta_of_variable_check(
    delta: DeltaOperator[PowerSeries], frobenius: FrobeniusSeries, D: int
) -> CheckResult:
    """δ(T) = (f − T^q)/π, which is T itself for f = πT + T^q."""
    spec = frobenius.spec
    f = frobenius.at(spec, D)
    variable = PowerSeries.variable(spec, D)
    if f == frobenius_polynomial(spec, D):
        expected, form = variable, "T"
    else:
        expected, form = (f - variable ** spec.q).div_pi(1), "(f - T^q)/pi"
    return CheckResult("delta-of-T", delta(variable) == expected, {"D": D, "expected": form})
