from __future__ import annotations

import pytest

from pitypical.errors import CertificateFailure, MismatchAgainstQnPlus1, OutOfRange, SpecMismatch
from pitypical.services.checks import all_passed, failures
from pitypical.services.field import OElement
from pitypical.services.lubin_tate import default_frobenius, iterate_pi
from pitypical.services.prism import (
    PrismCertificate,
    cofactor_seed,
    compute_qn,
    cyclotomic_frobenius,
    cyclotomic_qn,
    delta_of_qn,
    ideal_power_check,
    phi_ideal_image,
    prism_certificate,
    q_one,
    verify_prism_condition,
)
from pitypical.services.series import PowerSeries, reductions


def test_q1_and_q2_over_q2(q2) -> None:
    frobenius = default_frobenius(q2, 10)
    assert q_one(frobenius, 6) == PowerSeries.from_coeffs(q2, [2, 1], 6)
    assert compute_qn(frobenius, 2, 6) == PowerSeries.from_coeffs(q2, [2, 2, 1], 6)


def test_q2_over_q3_reduces_to_t_sixth(q3) -> None:
    frobenius = default_frobenius(q3, 12)
    residues = reductions(compute_qn(frobenius, 2, 10)).residues
    assert residues.t_valuation() == 6


@pytest.mark.parametrize("p", [2, 3])
def test_cyclotomic_oracle(p: int) -> None:
    from pitypical.services.presets import load_preset

    spec = load_preset(f"q{p}")
    D = 20
    frobenius = cyclotomic_frobenius(spec, D + 2)
    for n in range(1, 5 if p == 2 else 3):
        assert compute_qn(frobenius, n, D) == cyclotomic_qn(spec, n, D)


def test_default_f_over_q2_is_cyclotomic(q2) -> None:
    D = 24
    frobenius = default_frobenius(q2, D + 2)
    for n in range(1, 5):
        assert compute_qn(frobenius, n, D) == cyclotomic_qn(q2, n, D)


def test_cyclotomic_needs_prime_field(q2_ramified) -> None:
    with pytest.raises(SpecMismatch):
        cyclotomic_frobenius(q2_ramified, 8)


def test_n1_certificate_over_q2(q2) -> None:
    frobenius = default_frobenius(q2, 12)
    assert cofactor_seed(frobenius, 8) == PowerSeries.from_coeffs(q2, [-1], 8)
    certificate = prism_certificate(frobenius, 1, 8)
    assert certificate.cofactor == PowerSeries.from_coeffs(q2, [0, -1], 8)
    T = PowerSeries.variable(q2, 8)
    assert certificate.q_n1 - T * certificate.q_n == PowerSeries.from_coeffs(q2, [2], 8)
    document = certificate.to_dict()
    assert document["pass"] is True
    assert document["checked_mod_degree"] == 9
    assert set(document) == {"n", "q_n", "q_n1", "cofactor", "checked_mod_degree", "pass"}


def test_seed_identity(preset) -> None:
    frobenius = default_frobenius(preset, 12)
    D = 8
    T = PowerSeries.variable(preset, D)
    pi = PowerSeries.from_coeffs(preset, [OElement.pi(preset)], D)
    assert q_one(frobenius, D) + T * cofactor_seed(frobenius, D) == pi


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_certificates_hold_at_degree_64(preset, n: int) -> None:
    frobenius = default_frobenius(preset, 66)
    results = verify_prism_condition(frobenius, n, 64)
    assert all_passed(results), failures(results)


def test_certificate_is_stable_under_raising_degree(q3) -> None:
    frobenius = default_frobenius(q3, 40)
    low = prism_certificate(frobenius, 2, 20)
    high = prism_certificate(frobenius, 2, 36)
    assert low.cofactor == high.cofactor
    assert high.holds()


def test_broken_certificate_is_detected(q2) -> None:
    frobenius = default_frobenius(q2, 10)
    good = prism_certificate(frobenius, 1, 8)
    broken = PrismCertificate(
        good.spec, frobenius, 1, good.q_n, good.q_n1, good.cofactor + PowerSeries.variable(q2, 8), 8
    )
    assert not broken.holds()
    assert not broken.to_dict()["pass"]


def test_phi_image(preset) -> None:
    frobenius = default_frobenius(preset, 20)
    for n in range(1, 4):
        assert phi_ideal_image(frobenius, n, 16) == compute_qn(frobenius, n + 1, 16)


def test_phi_image_mismatch_is_raised(q2, monkeypatch) -> None:
    import pitypical.services.prism.certificates as certificates

    frobenius = default_frobenius(q2, 10)
    monkeypatch.setattr(
        certificates, "frobenius_at", lambda f, D: PowerSeries.from_coeffs(q2, [0, 2, 1, 4], D)
    )
    with pytest.raises(MismatchAgainstQnPlus1):
        certificates.phi_ideal_image(frobenius, 1, 6)


def test_quotient_identity(preset) -> None:
    frobenius = default_frobenius(preset, 24)
    for n in range(1, 4):
        q_n = compute_qn(frobenius, n, 20)
        assert q_n * iterate_pi(frobenius, n - 1, 20) == iterate_pi(frobenius, n, 20)


def test_constant_term_is_pi(preset) -> None:
    frobenius = default_frobenius(preset, 20)
    for n in range(1, 5):
        assert compute_qn(frobenius, n, 16)[0] == OElement.pi(preset)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_ideal_power_inclusion(preset, k: int) -> None:
    frobenius = default_frobenius(preset, 12)
    for n in (1, 2):
        assert ideal_power_check(frobenius, n, k, k).passed


def test_delta_of_q1_over_q2(q2) -> None:
    # δ(q_1)(0) = (2 − 2^2)/2 = −1, a unit
    frobenius = default_frobenius(q2, 8)
    assert delta_of_qn(frobenius, 1, 4) == -1


def test_verify_reports_delta_informationally(q2) -> None:
    frobenius = default_frobenius(q2, 20)
    results = {result.name: result for result in verify_prism_condition(frobenius, 1, 16)}
    assert results["delta-qn"].passed
    assert results["delta-qn"].details["informational"] is True
    assert results["delta-qn"].details["residue"] == [1]
    assert results["constant-term"].details == {"n": 1, "val_pi": 1, "caveat": False}


def test_n_must_be_positive(q2) -> None:
    frobenius = default_frobenius(q2, 8)
    with pytest.raises(OutOfRange):
        compute_qn(frobenius, 0, 6)
    with pytest.raises(OutOfRange):
        prism_certificate(frobenius, 0, 6)


def test_certificate_failure_is_raised_for_bad_input(q2, monkeypatch) -> None:
    import pitypical.services.prism.certificates as certificates

    frobenius = default_frobenius(q2, 10)
    monkeypatch.setattr(certificates, "cofactor_seed", lambda f, D: PowerSeries.zero(q2, D))
    with pytest.raises(CertificateFailure):
        certificates.prism_certificate(frobenius, 1, 8)