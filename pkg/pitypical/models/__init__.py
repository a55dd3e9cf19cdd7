"""Wire schemas for everything the CLI reads or writes as JSON."""
from __future__ import annotations

from typing import Any, Dict, List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator

from pitypical.config import DefaultConfig


class WireModel(BaseModel):
    model_config = ConfigDict(extra="forbid", populate_by_name=True)


class FieldSpecModel(WireModel):
    p: int
    g: List[int] = Field(default_factory=lambda: [0, 1])
    E: List[List[int]]
    M: int = Field(default_factory=lambda: DefaultConfig.DEFAULT_PRECISION)

    @field_validator("E")
    @classmethod
    def _rows_not_empty(cls, rows: List[List[int]]) -> List[List[int]]:
        if len(rows) < 2:
            raise ValueError("E needs at least a constant term and a leading coefficient")
        return rows


class ElementModel(WireModel):
    """An o_L element: row i holds the W(k_L) coefficients of π^i."""

    coeffs: List[List[int]]
    valid_prec: Optional[int] = None


class LaurentModel(WireModel):
    num: List[List[int]]
    denom_exp: int = 0
    valid_prec: Optional[int] = None


Coefficient = Union[int, ElementModel, LaurentModel]


class SeriesModel(WireModel):
    var: str = "T"
    D: Optional[int] = None
    coeffs: List[Coefficient]
    exact: bool = True


class BivariateModel(WireModel):
    vars: List[str] = Field(default_factory=lambda: ["X", "Y"])
    D: int
    coeffs: List[List[Union[ElementModel, int]]]


class CertificateModel(WireModel):
    n: int
    q_n: SeriesModel
    q_n1: SeriesModel
    cofactor: SeriesModel
    checked_mod_degree: int
    passed: bool = Field(alias="pass")


class PointsModel(WireModel):
    """Sample points for θ evaluation: integers or o_L elements."""

    points: List[Union[int, ElementModel]]


class WittPairModel(WireModel):
    """(a0, a1) over a named carrier; D is set for the series carrier only."""

    carrier: str
    D: Optional[int] = None
    a0: Dict[str, Any]
    a1: Dict[str, Any]


__all__ = [
    "BivariateModel",
    "CertificateModel",
    "Coefficient",
    "ElementModel",
    "FieldSpecModel",
    "LaurentModel",
    "PointsModel",
    "SeriesModel",
    "WireModel",
    "WittPairModel",
]
