from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Dict, Generic, Tuple, TypeVar

from pitypical.errors import SpecMismatch

from .carriers import Carrier

T = TypeVar("T")


@dataclass(frozen=True, eq=False)
class WittPair(Generic[T]):
    """(a0, a1) in the length-two ramified Witt vectors W(A)."""

    carrier: Carrier[T]
    a0: T
    a1: T

    @classmethod
    def of(cls, carrier: Carrier[T], a0: Any, a1: Any) -> "WittPair[T]":
        return cls(carrier, carrier.coerce(a0), carrier.coerce(a1))

    @classmethod
    def zero(cls, carrier: Carrier[T]) -> "WittPair[T]":
        return cls(carrier, carrier.zero(), carrier.zero())

    @classmethod
    def one(cls, carrier: Carrier[T]) -> "WittPair[T]":
        return cls(carrier, carrier.one(), carrier.zero())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WittPair):
            return NotImplemented
        return self.carrier == other.carrier and self.a0 == other.a0 and self.a1 == other.a1

    def __hash__(self) -> int:
        return hash(self.carrier)

    def __add__(self, other: "WittPair[T]") -> "WittPair[T]":
        return witt_add(self, other)

    def __mul__(self, other: "WittPair[T]") -> "WittPair[T]":
        return witt_mul(self, other)

    def to_json(self) -> Dict[str, Any]:
        return {"a0": self.carrier.to_json(self.a0), "a1": self.carrier.to_json(self.a1)}


WittProduct = Callable[[WittPair, WittPair], WittPair]


def _same_carrier(a: WittPair, b: WittPair) -> Carrier:
    if a.carrier != b.carrier:
        raise SpecMismatch("Witt vectors over different carriers")
    return a.carrier


def bracket(carrier: Carrier[T], x: T, y: T) -> T:
    """⟨x, y⟩_q = x^q + y^q − (x + y)^q."""
    return carrier.q_power(x) + carrier.q_power(y) - carrier.q_power(x + y)


def witt_add(a: WittPair[T], b: WittPair[T]) -> WittPair[T]:
    carrier = _same_carrier(a, b)
    carry = carrier.div_pi(bracket(carrier, a.a0, b.a0))
    return WittPair(carrier, a.a0 + b.a0, a.a1 + b.a1 + carry)


def witt_neg(a: WittPair[T]) -> WittPair[T]:
    """The additive inverse: (−a0, −a1 − ⟨a0, −a0⟩_q/π)."""
    carrier = a.carrier
    # a1 + b1 + (a0^q + (−a0)^q)/π must vanish
    a0 = carrier.zero() - a.a0
    correction = carrier.div_pi(carrier.zero() - carrier.q_power(a.a0) - carrier.q_power(a0))
    return WittPair(carrier, a0, correction - a.a1)


def witt_mul(a: WittPair[T], b: WittPair[T]) -> WittPair[T]:
    """(a0 b0, π a1 b1 + a1 b0^q + b1 a0^q)."""
    carrier = _same_carrier(a, b)
    second = (
        carrier.pi_times(a.a1 * b.a1)
        + a.a1 * carrier.q_power(b.a0)
        + b.a1 * carrier.q_power(a.a0)
    )
    return WittPair(carrier, a.a0 * b.a0, second)


def witt_mul_literal(a: WittPair[T], b: WittPair[T]) -> WittPair[T]:
    """
    The uncrossed rule π a1 b1 + a1 a0^q + b1 b0^q.

    Differs from witt_mul by (a1 − b1)(a0^q − b0^q), so the second ghost
    component is off by π times that; kept for the regression that demonstrates this.
    """
    carrier = _same_carrier(a, b)
    second = (
        carrier.pi_times(a.a1 * b.a1)
        + a.a1 * carrier.q_power(a.a0)
        + b.a1 * carrier.q_power(b.a0)
    )
    return WittPair(carrier, a.a0 * b.a0, second)


def ghost_map(a: WittPair[T]) -> Tuple[T, T]:
    """(a0, a0^q + π a1)."""
    carrier = a.carrier
    return a.a0, carrier.q_power(a.a0) + carrier.pi_times(a.a1)


def projection(a: WittPair[T]) -> T:
    """W(A) → A, (a0, a1) ↦ a0."""
    return a.a0
