from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from .arith import w_mul
from .spec import LocalFieldSpec

Residue = Tuple[int, ...]


@dataclass(frozen=True)
class ResidueField:
    """k_L = F_p[ω]/g, elements are length-f tuples of residues mod p."""

    spec: LocalFieldSpec

    @property
    def zero(self) -> Residue:
        return (0,) * self.spec.f

    @property
    def one(self) -> Residue:
        return (1,) + (0,) * (self.spec.f - 1)

    def add(self, a: Residue, b: Residue) -> Residue:
        p = self.spec.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def mul(self, a: Residue, b: Residue) -> Residue:
        p = self.spec.p
        return tuple(c % p for c in w_mul(self.spec.g, a, b))

    def is_zero(self, a: Residue) -> bool:
        return not any(a)
