from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Union

from pitypical.errors import IntegralityFailure, NotUnit, SpecMismatch

from .element import OElement
from .spec import LocalFieldSpec


@dataclass(frozen=True, eq=False)
class LaurentScalar:
    """π^{-denom_exp} · num, an element of L."""

    num: OElement
    denom_exp: int = 0

    def __post_init__(self) -> None:
        num, m = self.num, self.denom_exp
        if m < 0:
            num = num * OElement.pi(num.spec) ** (-m)
            m = 0
        if m > 0:
            valuation = num.val_pi()
            if valuation != math.inf and valuation > 0:
                k = min(int(valuation), m)
                num = num.div_pi_exact(k)
                m -= k
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "denom_exp", m)

    @classmethod
    def zero(cls, spec: LocalFieldSpec) -> "LaurentScalar":
        return cls(OElement.zero(spec))

    @classmethod
    def one(cls, spec: LocalFieldSpec) -> "LaurentScalar":
        return cls(OElement.one(spec))

    @classmethod
    def lift(cls, value: Union["LaurentScalar", OElement, int], spec: LocalFieldSpec) -> "LaurentScalar":
        if isinstance(value, LaurentScalar):
            return value
        if isinstance(value, OElement):
            return cls(value)
        return cls(OElement.from_int(spec, value))

    @property
    def spec(self) -> LocalFieldSpec:
        return self.num.spec

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_exact_zero(self) -> bool:
        return self.denom_exp == 0 and self.num.is_exact_zero()

    def is_integral(self) -> Optional[bool]:
        """True or False when decidable; None when the numerator vanishes at its precision."""
        if self.denom_exp == 0:
            return True
        if self.num.is_zero():
            return None
        return False

    def to_integral(self) -> OElement:
        verdict = self.is_integral()
        if verdict is True:
            return self.num
        if verdict is None:
            return self.num.div_pi_exact(self.denom_exp)
        raise IntegralityFailure(f"value has π-denominator π^{self.denom_exp}")

    def val_pi(self) -> Union[int, float]:
        return self.num.val_pi() - self.denom_exp

    def _coerce(self, other: Union["LaurentScalar", OElement, int]) -> "LaurentScalar":
        other = LaurentScalar.lift(other, self.spec)
        if other.spec != self.spec:
            raise SpecMismatch("operands belong to different field specs")
        return other

    def __add__(self, other: Union["LaurentScalar", OElement, int]) -> "LaurentScalar":
        other = self._coerce(other)
        a, b = self, other
        if a.denom_exp < b.denom_exp:
            a, b = b, a
        shift = a.denom_exp - b.denom_exp
        num_b = b.num if shift == 0 else b.num * OElement.pi(self.spec) ** shift
        return LaurentScalar(a.num + num_b, a.denom_exp)

    __radd__ = __add__

    def __neg__(self) -> "LaurentScalar":
        return LaurentScalar(-self.num, self.denom_exp)

    def __sub__(self, other: Union["LaurentScalar", OElement, int]) -> "LaurentScalar":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Union["LaurentScalar", OElement, int]) -> "LaurentScalar":
        return (-self) + other

    def __mul__(self, other: Union["LaurentScalar", OElement, int]) -> "LaurentScalar":
        other = self._coerce(other)
        return LaurentScalar(self.num * other.num, self.denom_exp + other.denom_exp)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "LaurentScalar":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return LaurentScalar(self.num ** exponent, self.denom_exp * exponent)

    def div_pi(self, k: int = 1) -> "LaurentScalar":
        return LaurentScalar(self.num, self.denom_exp + k)

    def inverse(self) -> "LaurentScalar":
        valuation = self.num.val_pi()
        if valuation == math.inf:
            raise NotUnit("cannot invert a value that vanishes at its precision")
        unit = self.num.div_pi_exact(int(valuation))
        return LaurentScalar(unit.inverse(), int(valuation) - self.denom_exp)

    def with_spec(self, spec: LocalFieldSpec, exact: bool = False) -> "LaurentScalar":
        return LaurentScalar(self.num.with_spec(spec, exact=exact), self.denom_exp)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, (LaurentScalar, OElement, int)):
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self) -> int:
        return hash(self.spec)

    def __repr__(self) -> str:
        return f"LaurentScalar({self.num!r}, denom_exp={self.denom_exp})"
