from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence, Tuple

from sympy import Poly, isprime, symbols

from pitypical.errors import BadPrecision, FieldSpecError, NotEisenstein, ReducibleResidual

from .arith import Flat, int_valuation, mul_raw

logger = logging.getLogger(__name__)

_Y = symbols("y")


@dataclass(frozen=True)
class LocalFieldSpec:
    """
    Presentation o_L = W(k_L)[π]/E(π) with W(k_L) = Z_p[y]/g(y).

    ``g`` is low-degree first and monic. ``E`` is low-degree first, includes its
    leading 1, and each coefficient is a W(k_L) element of length f.
    Elements built on this spec are exact modulo p^M.
    """

    p: int
    g: Tuple[int, ...]
    E: Tuple[Tuple[int, ...], ...]
    M: int

    @property
    def f(self) -> int:
        return len(self.g) - 1

    @property
    def e(self) -> int:
        return len(self.E) - 1

    @property
    def q(self) -> int:
        return self.p ** self.f

    @property
    def n(self) -> int:
        return self.e * self.f

    @cached_property
    def modulus(self) -> int:
        return self.p ** self.M

    @cached_property
    def eisenstein_body(self) -> Tuple[Tuple[int, ...], ...]:
        """E_0, ..., E_{e-1}: the relation π^e = -Σ E_i π^i."""
        return self.E[:-1]

    @cached_property
    def pi_coeffs(self) -> Flat:
        size = self.e * self.f
        if self.e >= 2:
            coeffs = [0] * size
            coeffs[self.f] = 1
            return tuple(coeffs)
        return tuple((-c) % self.modulus for c in self.E[0])

    @cached_property
    def pi_e_unit_inverse(self) -> Flat:
        """Inverse of the unit v with π^e = p·v, exact mod p^M."""
        from .element import inverse_raw

        unit = []
        for row in self.eisenstein_body:
            unit.extend((-(c // self.p)) % self.modulus for c in row)
        return inverse_raw(self, tuple(unit), self.M)

    def mul(self, a: Sequence[int], b: Sequence[int], modulus: int) -> Flat:
        return mul_raw(self.e, self.f, self.g, self.eisenstein_body, a, b, modulus)

    def with_precision(self, M: int) -> "LocalFieldSpec":
        if M == self.M:
            return self
        if M < 2:
            raise BadPrecision(f"Working precision must be at least 2, got {M}")
        return LocalFieldSpec(p=self.p, g=self.g, E=self.E, M=M)

    def same_field(self, other: "LocalFieldSpec") -> bool:
        return (self.p, self.g, self.E) == (other.p, other.g, other.E)

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "g": list(self.g),
            "E": [list(row) for row in self.E],
            "M": self.M,
        }

    def describe(self) -> dict:
        return {**self.to_dict(), "q": self.q, "e": self.e, "f": self.f, "n": self.n}


def make_field_spec(
    p: int,
    g: Sequence[int],
    E: Sequence[Iterable[int]],
    M: int,
) -> LocalFieldSpec:
    """Validate the presentation and build a LocalFieldSpec."""
    if M < 2:
        raise BadPrecision(f"Working precision must be at least 2, got {M}")
    if not isprime(p):
        raise FieldSpecError(f"p must be prime, got {p}")

    g_tuple = _strip(tuple(int(c) for c in g))
    if len(g_tuple) < 2 or g_tuple[-1] != 1:
        raise FieldSpecError(f"g must be monic of degree >= 1, got {list(g_tuple)}")
    residual = Poly(list(reversed(g_tuple)), _Y, modulus=p)
    if residual.degree() != len(g_tuple) - 1 or not residual.is_irreducible:
        raise ReducibleResidual(f"g = {list(g_tuple)} is not irreducible mod {p}")

    f = len(g_tuple) - 1
    rows = tuple(_reduce_mod_g([int(c) for c in row], g_tuple) for row in E)
    while len(rows) > 1 and not any(rows[-1]):
        rows = rows[:-1]
    if len(rows) < 2:
        raise NotEisenstein("E must have degree >= 1")
    if rows[-1] != (1,) + (0,) * (f - 1):
        raise NotEisenstein(f"E must be monic, leading coefficient is {list(rows[-1])}")

    for index, row in enumerate(rows[:-1]):
        if any(c % p for c in row):
            raise NotEisenstein(f"coefficient of x^{index} is not divisible by {p}")
    constant = rows[0]
    if min(int_valuation(c, p, 2) for c in constant) != 1:
        raise NotEisenstein(
            f"constant term {list(constant)} does not have p-valuation exactly 1"
        )

    spec = LocalFieldSpec(p=p, g=g_tuple, E=rows, M=M)
    logger.debug("Built field spec p=%s q=%s e=%s f=%s M=%s", p, spec.q, spec.e, f, M)
    return spec


def _strip(coeffs: Tuple[int, ...]) -> Tuple[int, ...]:
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs = coeffs[:-1]
    return coeffs


def _reduce_mod_g(poly: Sequence[int], g: Sequence[int]) -> Tuple[int, ...]:
    f = len(g) - 1
    work = list(poly) + [0] * max(0, f - len(poly))
    for k in range(len(work) - 1, f - 1, -1):
        c = work[k]
        if c:
            for i in range(f):
                work[k - f + i] -= c * g[i]
            work[k] = 0
    return tuple(work[:f])
