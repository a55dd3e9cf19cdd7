from .certificates import (
    PrismCertificate,
    delta_of_qn,
    ideal_power_check,
    phi_ideal_image,
    prism_certificate,
    verify_prism_condition,
)
from .qseries import compute_qn, cofactor_seed, cyclotomic_frobenius, cyclotomic_qn, q_one

__all__ = [
    "PrismCertificate",
    "cofactor_seed",
    "compute_qn",
    "cyclotomic_frobenius",
    "cyclotomic_qn",
    "delta_of_qn",
    "ideal_power_check",
    "phi_ideal_image",
    "prism_certificate",
    "q_one",
    "verify_prism_condition",
]
