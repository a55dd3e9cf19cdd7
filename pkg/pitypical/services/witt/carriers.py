from __future__ import annotations

import random
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Dict, Generic, TypeVar

from pitypical.errors import SpecMismatch
from pitypical.services.field import LocalFieldSpec, OElement
from pitypical.services.series import PowerSeries
from pitypical.utils.serialization import (
    element_from_dict,
    element_to_dict,
    series_from_dict,
    series_to_dict,
)

T = TypeVar("T")

CARRIER_ZMOD = "zmod"
CARRIER_OFIELD = "ofield"
CARRIER_SERIES = "series"


class Carrier(ABC, Generic[T]):
    """
    An o_L-algebra A whose elements support +, -, * and ** natively.

    Subclasses add the pieces W(A) and δ need: π-multiplication, exact
    π-division and sampling.
    """

    name: str
    spec: LocalFieldSpec

    @abstractmethod
    def zero(self) -> T: ...

    @abstractmethod
    def one(self) -> T: ...

    @abstractmethod
    def from_int(self, value: int) -> T: ...

    @abstractmethod
    def random(self, rng: random.Random) -> T: ...

    @abstractmethod
    def div_pi(self, value: T) -> T:
        """Exact division by π; raises NotDivisible otherwise."""

    @abstractmethod
    def to_json(self, value: T) -> Dict[str, Any]: ...

    @abstractmethod
    def from_json(self, data: Dict[str, Any]) -> T: ...

    def pi_times(self, value: T) -> T:
        return value * OElement.pi(self.spec)

    def q_power(self, value: T) -> T:
        return value ** self.spec.q

    def coerce(self, value: Any) -> T:
        return self.from_int(value) if isinstance(value, int) else value


@dataclass(frozen=True, eq=True)
class ElementCarrier(Carrier[OElement]):
    """o_L itself; over a Q_p spec this is Z_p known modulo p^M."""

    spec: LocalFieldSpec
    name: str = CARRIER_OFIELD

    def __post_init__(self) -> None:
        if self.name == CARRIER_ZMOD and (self.spec.e, self.spec.f) != (1, 1):
            raise SpecMismatch("the zmod carrier needs a spec with e = f = 1")

    def zero(self) -> OElement:
        return OElement.zero(self.spec)

    def one(self) -> OElement:
        return OElement.one(self.spec)

    def from_int(self, value: int) -> OElement:
        return OElement.from_int(self.spec, value)

    def random(self, rng: random.Random) -> OElement:
        return OElement.random(self.spec, rng)

    def div_pi(self, value: OElement) -> OElement:
        return value.div_pi_exact(1)

    def to_json(self, value: OElement) -> Dict[str, Any]:
        return element_to_dict(value)

    def from_json(self, data: Dict[str, Any]) -> OElement:
        return element_from_dict(self.spec, data)


@dataclass(frozen=True, eq=True)
class SeriesCarrier(Carrier[PowerSeries]):
    """o_L[[T]] truncated at degree D."""

    spec: LocalFieldSpec
    D: int
    name: str = CARRIER_SERIES

    def zero(self) -> PowerSeries:
        return PowerSeries.zero(self.spec, self.D)

    def one(self) -> PowerSeries:
        return PowerSeries.one(self.spec, self.D)

    def from_int(self, value: int) -> PowerSeries:
        return PowerSeries.from_coeffs(self.spec, [value], self.D)

    def random(self, rng: random.Random) -> PowerSeries:
        return PowerSeries.from_coeffs(
            self.spec, [OElement.random(self.spec, rng) for _ in range(self.D + 1)], self.D
        )

    def div_pi(self, value: PowerSeries) -> PowerSeries:
        return value.div_pi(1)

    def to_json(self, value: PowerSeries) -> Dict[str, Any]:
        return series_to_dict(value)

    def from_json(self, data: Dict[str, Any]) -> PowerSeries:
        return series_from_dict(self.spec, data).truncate(self.D)


def make_carrier(name: str, spec: LocalFieldSpec, D: int = 8) -> Carrier:
    if name in (CARRIER_ZMOD, CARRIER_OFIELD):
        return ElementCarrier(spec, name)
    if name == CARRIER_SERIES:
        return SeriesCarrier(spec, D)
    raise ValueError(f"unknown carrier {name!r}; expected zmod, ofield or series")
