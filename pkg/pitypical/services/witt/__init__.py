from .axioms import LAWS, random_pair, ring_axiom_report
from .carriers import (
    CARRIER_OFIELD,
    CARRIER_SERIES,
    CARRIER_ZMOD,
    Carrier,
    ElementCarrier,
    SeriesCarrier,
    make_carrier,
)
from .delta import (
    DeltaOperator,
    canonical_delta,
    delta_apply,
    delta_of_one_check,
    delta_of_variable_check,
    derived_rules_check,
    identity_delta,
    lift_reconstruction_check,
    section_check,
)
from .vectors import (
    WittPair,
    bracket,
    ghost_map,
    projection,
    witt_add,
    witt_mul,
    witt_mul_literal,
    witt_neg,
)

__all__ = [
    "CARRIER_OFIELD",
    "CARRIER_SERIES",
    "CARRIER_ZMOD",
    "Carrier",
    "DeltaOperator",
    "ElementCarrier",
    "LAWS",
    "SeriesCarrier",
    "WittPair",
    "bracket",
    "canonical_delta",
    "delta_apply",
    "delta_of_one_check",
    "delta_of_variable_check",
    "derived_rules_check",
    "ghost_map",
    "identity_delta",
    "lift_reconstruction_check",
    "make_carrier",
    "projection",
    "random_pair",
    "ring_axiom_report",
    "section_check",
    "witt_add",
    "witt_mul",
    "witt_mul_literal",
    "witt_neg",
]
