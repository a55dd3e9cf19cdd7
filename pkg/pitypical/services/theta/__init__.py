from .checks import (
    frobenius_identity_check,
    leading_coefficient_check,
    recursion_identity_check,
    theta_eval_check,
)
from .numerical import (
    ThetaPolynomial,
    denominator_bound,
    theta_family,
    theta_poly,
    theta_value,
    theta_value_recursive,
)

__all__ = [
    "ThetaPolynomial",
    "denominator_bound",
    "frobenius_identity_check",
    "leading_coefficient_check",
    "recursion_identity_check",
    "theta_eval_check",
    "theta_family",
    "theta_poly",
    "theta_value",
    "theta_value_recursive",
]
