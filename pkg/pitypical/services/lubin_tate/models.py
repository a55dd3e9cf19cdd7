from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Tuple, Union

from pitypical.errors import OutOfRange
from pitypical.services.field import LaurentScalar, LocalFieldSpec, OElement
from pitypical.services.series import BivariateSeries, PowerSeries

from .frobenius import FrobeniusSeries
from .logarithm import honda_frobenius, honda_logarithm, logarithm
from .solver import build_endomorphism, build_group_law

logger = logging.getLogger(__name__)

SOURCE_F = "f"
SOURCE_HONDA = "honda"


@dataclass(frozen=True)
class FormalGroupModel:
    """A Lubin–Tate law together with its logarithm and the endomorphisms computed so far."""

    spec: LocalFieldSpec
    source: str
    frobenius: FrobeniusSeries
    law: BivariateSeries
    log: PowerSeries
    endos: Tuple[Tuple[OElement, PowerSeries], ...] = ()

    def endomorphism(self, a: Union[OElement, int]) -> PowerSeries:
        if isinstance(a, int):
            a = OElement.from_int(self.spec, a)
        for scalar, series in self.endos:
            if scalar == a:
                return series
        return build_endomorphism(self.frobenius, a, self.log.D)


def f_model(frobenius: FrobeniusSeries, D: int, law_degree: Optional[int] = None) -> FormalGroupModel:
    law = build_group_law(frobenius, law_degree or D)
    log = logarithm(frobenius, D)
    pi = OElement.pi(frobenius.spec)
    return FormalGroupModel(
        frobenius.spec, SOURCE_F, frobenius, law, log, ((pi, frobenius.at(frobenius.spec, D)),)
    )


def honda_model(spec: LocalFieldSpec, D: int, law_degree: Optional[int] = None) -> FormalGroupModel:
    """
    The Honda law over o_L: log = Σ π^{-k} T^{q^k}.

    [π] is solved from log([π]) = π·log with an integrality check at every
    degree; F is the unique law having that [π] as an endomorphism, which is
    exp(log X + log Y).
    """
    if D < spec.q:
        raise OutOfRange(f"Honda model needs D >= q = {spec.q}, got {D}")
    log = honda_logarithm(spec, D)
    frobenius = honda_frobenius(spec, D)
    law = build_group_law(frobenius, law_degree or D)
    logger.info("Built Honda model over %s to degree %s (law degree %s)", spec.describe(), D, law.D)
    return FormalGroupModel(
        spec, SOURCE_HONDA, frobenius, law, log, ((OElement.pi(spec), frobenius.series),)
    )


def genus_cp(model: FormalGroupModel, m: int) -> LaurentScalar:
    """(m+1)·c_{m+1}, the value of the genus on CP^m read off the model's logarithm."""
    if m < 0 or m + 1 > model.log.D:
        raise OutOfRange(f"genus of CP^{m} needs the logarithm to degree {m + 1}, have {model.log.D}")
    return model.log[m + 1] * (m + 1)
