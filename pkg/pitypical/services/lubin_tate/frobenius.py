from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from pitypical.errors import BadFrobeniusReduction, BadLinearTerm, SpecMismatch
from pitypical.services.field import LocalFieldSpec, OElement
from pitypical.services.series import PowerSeries

SeriesBuilder = Callable[[LocalFieldSpec, int], PowerSeries]


@dataclass(frozen=True)
class FrobeniusSeries:
    """
    A series f with f ≡ πT mod degree 2 and f ≡ T^q mod π.

    ``exact`` marks integer data that may be lifted to any precision;
    ``builder`` regenerates f at another precision when it is computed rather
    than given.
    """

    series: PowerSeries
    exact: bool = False
    builder: Optional[SeriesBuilder] = field(default=None, compare=False, repr=False)

    @property
    def spec(self) -> LocalFieldSpec:
        return self.series.spec

    @property
    def D(self) -> int:
        return self.series.D

    def at(self, spec: LocalFieldSpec, D: int) -> PowerSeries:
        """f truncated at D, moved to another precision of the same field."""
        if self.builder is not None and (spec != self.spec or D > self.D):
            return self.builder(spec, D)
        return self.series.truncate(D).with_spec(spec, exact=self.exact)


def validate_frobenius_series(
    f: PowerSeries,
    spec: LocalFieldSpec,
    exact: bool = False,
    builder: Optional[SeriesBuilder] = None,
) -> FrobeniusSeries:
    if f.spec != spec:
        raise SpecMismatch("Frobenius series is over a different field spec")
    if f.laurent:
        raise BadFrobeniusReduction("Frobenius series must have integral coefficients")
    if f.D < spec.q:
        raise BadFrobeniusReduction(f"truncation {f.D} is below q = {spec.q}")

    if not f[0].is_zero():
        raise BadLinearTerm("constant term must vanish")
    if f[1] != OElement.pi(spec):
        raise BadLinearTerm(f"coefficient of T must be π, got {f[1]!r}")

    for degree in range(2, f.D + 1):
        residual = f[degree] - (1 if degree == spec.q else 0)
        if residual.val_pi() < 1:
            raise BadFrobeniusReduction(
                f"coefficient of T^{degree} breaks f ≡ T^{spec.q} mod π"
            )
    return FrobeniusSeries(f, exact=exact, builder=builder)


def frobenius_polynomial(spec: LocalFieldSpec, D: int) -> PowerSeries:
    """πT + T^q truncated at D."""
    return PowerSeries.from_coeffs(spec, [0, OElement.pi(spec)] + [0] * (spec.q - 2) + [1], D)


def default_frobenius(spec: LocalFieldSpec, D: int) -> FrobeniusSeries:
    return validate_frobenius_series(
        frobenius_polynomial(spec, D), spec, exact=True, builder=frobenius_polynomial
    )
