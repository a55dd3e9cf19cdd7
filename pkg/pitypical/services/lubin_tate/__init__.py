from .checks import (
    associativity_check,
    commutativity_check,
    endomorphism_checks,
    equivariance_check,
    height,
    reduce_group_law,
    unit_check,
)
from .frobenius import FrobeniusSeries, default_frobenius, validate_frobenius_series
from .logarithm import honda_frobenius, honda_logarithm, logarithm, series_from_logarithm
from .models import FormalGroupModel, f_model, genus_cp, honda_model
from .solver import build_endomorphism, build_group_law, certified_precision, iterate_pi, loss_bound

__all__ = [
    "FormalGroupModel",
    "FrobeniusSeries",
    "associativity_check",
    "build_endomorphism",
    "build_group_law",
    "certified_precision",
    "commutativity_check",
    "default_frobenius",
    "endomorphism_checks",
    "equivariance_check",
    "f_model",
    "genus_cp",
    "height",
    "honda_frobenius",
    "honda_logarithm",
    "honda_model",
    "iterate_pi",
    "logarithm",
    "loss_bound",
    "reduce_group_law",
    "series_from_logarithm",
    "unit_check",
    "validate_frobenius_series",
]
