from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple, Union

from pitypical.errors import NotDivisible, NotUnit, PrecisionExhausted, SpecMismatch

from .arith import Flat, add_raw, int_valuation, sub_raw
from .spec import LocalFieldSpec

Scalar = Union["OElement", int]


@dataclass(frozen=True)
class Valuation:
    """A π-adic valuation; ``caveat`` marks an ∞ that only holds at the element's precision."""

    value: Union[int, float]
    caveat: bool = False

    def is_infinite(self) -> bool:
        return self.value == math.inf


@dataclass(frozen=True, eq=False)
class OElement:
    """
    Element of o_L known modulo p^valid_prec.

    Residues are kept reduced into [0, p^valid_prec); equality compares
    modulo the smaller of the two precisions.
    """

    spec: LocalFieldSpec
    coeffs: Flat
    valid_prec: int

    def __post_init__(self) -> None:
        size = self.spec.e * self.spec.f
        if len(self.coeffs) != size:
            raise ValueError(f"expected {size} coefficients, got {len(self.coeffs)}")
        prec = min(self.valid_prec, self.spec.M)
        if prec < 0:
            raise PrecisionExhausted("negative precision")
        modulus = self.spec.p ** prec
        object.__setattr__(self, "valid_prec", prec)
        object.__setattr__(self, "coeffs", tuple(int(c) % modulus for c in self.coeffs))

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, spec: LocalFieldSpec) -> "OElement":
        return cls(spec, (0,) * (spec.e * spec.f), spec.M)

    @classmethod
    def one(cls, spec: LocalFieldSpec) -> "OElement":
        return cls.from_int(spec, 1)

    @classmethod
    def from_int(cls, spec: LocalFieldSpec, value: int) -> "OElement":
        coeffs = [0] * (spec.e * spec.f)
        coeffs[0] = value
        return cls(spec, tuple(coeffs), spec.M)

    @classmethod
    def pi(cls, spec: LocalFieldSpec) -> "OElement":
        return cls(spec, spec.pi_coeffs, spec.M)

    @classmethod
    def from_rows(
        cls,
        spec: LocalFieldSpec,
        rows: Sequence[Sequence[int]],
        valid_prec: Optional[int] = None,
    ) -> "OElement":
        """Build from an e-by-f array (row i holds the W(k_L) coefficient of π^i)."""
        flat = [0] * (spec.e * spec.f)
        for i, row in enumerate(rows):
            for j, value in enumerate(row):
                if i >= spec.e or j >= spec.f:
                    raise ValueError(f"coefficient ({i}, {j}) outside the {spec.e}x{spec.f} basis")
                flat[i * spec.f + j] = int(value)
        return cls(spec, tuple(flat), spec.M if valid_prec is None else valid_prec)

    @classmethod
    def random(cls, spec: LocalFieldSpec, rng: random.Random) -> "OElement":
        modulus = spec.modulus
        return cls(spec, tuple(rng.randrange(modulus) for _ in range(spec.e * spec.f)), spec.M)

    # -- views --------------------------------------------------------------

    def rows(self) -> Tuple[Tuple[int, ...], ...]:
        f = self.spec.f
        return tuple(self.coeffs[i * f:(i + 1) * f] for i in range(self.spec.e))

    def residue(self) -> Tuple[int, ...]:
        """Image in k_L = F_p[ω]/g, as f residues mod p."""
        p = self.spec.p
        return tuple(c % p for c in self.coeffs[: self.spec.f])

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_exact_zero(self) -> bool:
        return self.valid_prec == self.spec.M and not any(self.coeffs)

    def vp(self) -> int:
        """Lower bound for the p-adic valuation, capped at valid_prec."""
        best = self.valid_prec
        p = self.spec.p
        for c in self.coeffs:
            if c:
                best = min(best, int_valuation(c, p, best))
                if best == 0:
                    break
        return best

    def val_pi(self) -> Union[int, float]:
        """π-adic valuation; math.inf when the element vanishes at its precision (see ``valuation``)."""
        spec = self.spec
        e, f, p = spec.e, spec.f, spec.p
        best: Union[int, float] = math.inf
        for i in range(e):
            row = self.coeffs[i * f:(i + 1) * f]
            w = min((int_valuation(c, p, self.valid_prec) for c in row if c), default=None)
            if w is not None:
                best = min(best, e * w + i)
        return best

    def valuation(self) -> Valuation:
        """val_pi with its caveat: ∞ on an element that is not exactly zero is precision-limited."""
        value = self.val_pi()
        return Valuation(value, value == math.inf and not self.is_exact_zero())

    def with_spec(self, spec: LocalFieldSpec, exact: bool = False) -> "OElement":
        """Move to another precision of the same field."""
        if not spec.same_field(self.spec):
            raise SpecMismatch("cannot move an element between different fields")
        prec = spec.M if exact else min(self.valid_prec, spec.M)
        return OElement(spec, self.coeffs, prec)

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other: Scalar) -> "OElement":
        if isinstance(other, OElement):
            if other.spec != self.spec:
                raise SpecMismatch("operands belong to different field specs")
            return other
        if isinstance(other, int):
            return OElement.from_int(self.spec, other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: Scalar) -> "OElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        prec = min(self.valid_prec, other.valid_prec)
        return OElement(self.spec, add_raw(self.coeffs, other.coeffs, self.spec.p ** prec), prec)

    __radd__ = __add__

    def __neg__(self) -> "OElement":
        return OElement(self.spec, tuple(-c for c in self.coeffs), self.valid_prec)

    def __sub__(self, other: Scalar) -> "OElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        prec = min(self.valid_prec, other.valid_prec)
        return OElement(self.spec, sub_raw(self.coeffs, other.coeffs, self.spec.p ** prec), prec)

    def __rsub__(self, other: Scalar) -> "OElement":
        return (-self) + other

    def __mul__(self, other: Scalar) -> "OElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        prec = min(
            self.valid_prec + other.vp(),
            other.valid_prec + self.vp(),
            self.spec.M,
        )
        coeffs = self.spec.mul(self.coeffs, other.coeffs, self.spec.p ** prec)
        return OElement(self.spec, coeffs, prec)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "OElement":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = OElement.one(self.spec)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = OElement.from_int(self.spec, other)
        if not isinstance(other, OElement):
            return NotImplemented
        if other.spec != self.spec:
            raise SpecMismatch("operands belong to different field specs")
        modulus = self.spec.p ** min(self.valid_prec, other.valid_prec)
        return all((a - b) % modulus == 0 for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self) -> int:
        return hash(self.spec)

    def __repr__(self) -> str:
        return f"OElement({[list(r) for r in self.rows()]}, prec={self.valid_prec})"

    # -- division -----------------------------------------------------------

    def div_pi_exact(self, k: int) -> "OElement":
        return div_pi_exact(self, k)

    def inverse(self) -> "OElement":
        if self.val_pi() != 0:
            raise NotUnit(f"{self!r} is not a unit of o_L")
        return OElement(self.spec, inverse_raw(self.spec, self.coeffs, self.valid_prec), self.valid_prec)


def val_pi(a: OElement) -> Union[int, float]:
    return a.val_pi()


def div_pi_exact(a: OElement, k: int) -> OElement:
    """
    Exact division by π^k.

    Uses π^{-k} = π^{e·t-k}·v^{-t}/p^t with t = ⌈k/e⌉ and π^e = p·v, so the
    result loses exactly t digits of p-precision.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return a
    valuation = a.val_pi()
    if valuation < k:
        raise NotDivisible(f"val_pi = {valuation} < {k}")

    spec = a.spec
    t = -(-k // spec.e)
    new_prec = a.valid_prec - t
    if new_prec < 1:
        raise PrecisionExhausted(
            f"dividing by π^{k} leaves no digits (valid_prec {a.valid_prec})"
        )
    if valuation == math.inf:
        return OElement(spec, (0,) * len(a.coeffs), new_prec)

    modulus = spec.p ** a.valid_prec
    x = a.coeffs
    shift = spec.e * t - k
    if shift:
        x = spec.mul(x, _pi_power_raw(spec, shift, modulus), modulus)
    x = spec.mul(x, _power_raw(spec, spec.pi_e_unit_inverse, t, modulus), modulus)

    divisor = spec.p ** t
    if any(c % divisor for c in x):
        raise NotDivisible(f"π^{k} division left a remainder")
    return OElement(spec, tuple(c // divisor for c in x), new_prec)


def _one_raw(spec: LocalFieldSpec) -> Flat:
    coeffs = [0] * (spec.e * spec.f)
    coeffs[0] = 1
    return tuple(coeffs)


def _power_raw(spec: LocalFieldSpec, base: Sequence[int], exponent: int, modulus: int) -> Flat:
    result = _one_raw(spec)
    base = tuple(base)
    while exponent:
        if exponent & 1:
            result = spec.mul(result, base, modulus)
        exponent >>= 1
        if exponent:
            base = spec.mul(base, base, modulus)
    return result


def _pi_power_raw(spec: LocalFieldSpec, exponent: int, modulus: int) -> Flat:
    return _power_raw(spec, spec.pi_coeffs, exponent, modulus)


def inverse_raw(spec: LocalFieldSpec, a: Sequence[int], precision: int) -> Flat:
    """Newton iteration x ← x(2 − a·x) started from a^{q−2}, exact mod p^precision."""
    modulus = spec.p ** precision
    x = _power_raw(spec, a, spec.q - 2, modulus)
    two = list(_one_raw(spec))
    two[0] = 2
    two_t = tuple(two)
    for _ in range((spec.e * precision).bit_length() + 1):
        ax = spec.mul(a, x, modulus)
        x = spec.mul(x, sub_raw(two_t, ax, modulus), modulus)
    return x
