from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional

from pitypical.errors import CertificateFailure, MismatchAgainstQnPlus1, OutOfRange
from pitypical.services.checks import CheckResult
from pitypical.services.field import LocalFieldSpec, OElement
from pitypical.services.lubin_tate import FrobeniusSeries, iterate_pi
from pitypical.services.series import PowerSeries, compose, reductions
from pitypical.services.witt import canonical_delta, delta_apply
from pitypical.utils.serialization import series_to_dict

from .qseries import cofactor_seed, compute_qn, frobenius_at

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PrismCertificate:
    """π = q_{n+1} + cofactor·q_n mod T^{D+1}, re-checkable by one multiplication."""

    spec: LocalFieldSpec
    frobenius: FrobeniusSeries
    n: int
    q_n: PowerSeries
    q_n1: PowerSeries
    cofactor: PowerSeries
    D: int

    def defect(self) -> PowerSeries:
        pi = PowerSeries.from_coeffs(self.spec, [OElement.pi(self.spec)], self.D)
        return self.q_n1 + self.cofactor * self.q_n - pi

    def holds(self) -> bool:
        return all(c.is_zero() for c in self.defect().coeffs)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "q_n": series_to_dict(self.q_n),
            "q_n1": series_to_dict(self.q_n1),
            "cofactor": series_to_dict(self.cofactor),
            "checked_mod_degree": self.D + 1,
            "pass": self.holds(),
        }


def prism_certificate(frobenius: FrobeniusSeries, n: int, D: int) -> PrismCertificate:
    """
    Certificate for π ∈ (q_n) + φ((q_n))·A.

    Applying φ^n to π = q_1 + T·f̃ gives π = q_{n+1} + [π^n]·f̃([π^n]) and
    [π^n] = q_n·[π^{n−1}], so the cofactor is [π^{n−1}]·f̃([π^n]).
    """
    if n < 1:
        raise OutOfRange(f"n must be at least 1, got {n}")
    spec = frobenius.spec
    seed = cofactor_seed(frobenius, D)
    cofactor = iterate_pi(frobenius, n - 1, D) * compose(seed, iterate_pi(frobenius, n, D))
    certificate = PrismCertificate(
        spec=spec,
        frobenius=frobenius,
        n=n,
        q_n=compute_qn(frobenius, n, D),
        q_n1=compute_qn(frobenius, n + 1, D),
        cofactor=cofactor,
        D=D,
    )
    if not certificate.holds():
        logger.error("Certificate for n=%s does not hold to degree %s", n, D)
        raise CertificateFailure(f"π ≠ q_{n + 1} + c·q_{n} mod T^{D + 1}")
    return certificate


def phi_ideal_image(frobenius: FrobeniusSeries, n: int, D: int) -> PowerSeries:
    """φ(q_n) = q_n∘f, which must equal q_{n+1}."""
    image = compose(compute_qn(frobenius, n, D), frobenius_at(frobenius, D))
    if image != compute_qn(frobenius, n + 1, D):
        raise MismatchAgainstQnPlus1(f"φ(q_{n}) differs from q_{n + 1} below degree {D + 1}")
    return image


def delta_of_qn(frobenius: FrobeniusSeries, n: int, D: int) -> OElement:
    """δ(q_n) at T = 0; its residue decides whether q_n is distinguished."""
    delta = canonical_delta(frobenius, D)
    return delta_apply(delta, compute_qn(frobenius, n, D))[0]


def ideal_power_check(frobenius: FrobeniusSeries, n: int, k: int, D: int) -> CheckResult:
    """
    (π, q_n)^k ⊂ (π, T)^k: every generator π^a q_n^b with a + b = k has its
    T^j coefficient in π^{k−j} for j < k.
    """
    spec = frobenius.spec
    D = max(D, k)
    q_n = compute_qn(frobenius, n, D)
    pi = OElement.pi(spec)
    for b in range(k + 1):
        generator = (q_n ** b).scale(pi ** (k - b))
        for j in range(k):
            if generator[j].val_pi() < k - j:
                return CheckResult(
                    "ideal-power",
                    False,
                    {"n": n, "k": k, "generator": {"pi_power": k - b, "qn_power": b}, "degree": j},
                )
    return CheckResult("ideal-power", True, {"n": n, "k": k})


def verify_prism_condition(frobenius: FrobeniusSeries, n: int, D: int) -> List[CheckResult]:
    """One entry per clause; failures are report content, never raised."""
    spec = frobenius.spec
    results: List[CheckResult] = []

    try:
        phi_ideal_image(frobenius, n, D)
        results.append(CheckResult("phi-image", True, {"n": n}))
    except MismatchAgainstQnPlus1 as exc:
        results.append(CheckResult("phi-image", False, {"n": n, "error": str(exc)}))

    try:
        certificate: Optional[PrismCertificate] = prism_certificate(frobenius, n, D)
        results.append(CheckResult("certificate", True, certificate.to_dict()))
    except CertificateFailure as exc:
        certificate = None
        results.append(CheckResult("certificate", False, {"n": n, "error": str(exc)}))

    q_n = certificate.q_n if certificate else compute_qn(frobenius, n, D)
    constant = q_n[0]
    constant_valuation = constant.valuation()
    results.append(
        CheckResult(
            "constant-term",
            constant == OElement.pi(spec) and constant_valuation.value == 1,
            {
                "n": n,
                "val_pi": None if constant_valuation.is_infinite() else int(constant_valuation.value),
                "caveat": constant_valuation.caveat,
            },
        )
    )

    expected = (spec.q - 1) * spec.q ** (n - 1)
    residues = reductions(q_n).residues
    valuation = residues.t_valuation()
    if expected <= D:
        results.append(
            CheckResult("leading-term", valuation == expected, {"expected": expected, "found": valuation})
        )
    else:
        results.append(
            CheckResult("leading-term", valuation > D, {"expected": expected, "found": None, "D": D})
        )

    quotient_ok = q_n * iterate_pi(frobenius, n - 1, D) == iterate_pi(frobenius, n, D)
    results.append(CheckResult("quotient", quotient_ok, {"n": n}))

    # constant term only
    delta_constant = delta_of_qn(frobenius, n, min(D, spec.q))
    results.append(
        CheckResult(
            "delta-qn",
            True,
            {"informational": True, "residue": list(delta_constant.residue())},
        )
    )
    return results
