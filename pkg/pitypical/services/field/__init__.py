from .element import OElement, Valuation, div_pi_exact, val_pi
from .laurent import LaurentScalar
from .residue import Residue, ResidueField
from .spec import LocalFieldSpec, make_field_spec

__all__ = [
    "LaurentScalar",
    "LocalFieldSpec",
    "OElement",
    "Residue",
    "ResidueField",
    "Valuation",
    "div_pi_exact",
    "make_field_spec",
    "val_pi",
]
