from __future__ import annotations

import json

import pytest
from pydantic import ValidationError

from pitypical.errors import FieldSpecError, NotEisenstein
from pitypical.models import CertificateModel, FieldSpecModel
from pitypical.services.field import LaurentScalar, OElement
from pitypical.services.lubin_tate import build_group_law, default_frobenius, logarithm
from pitypical.services.presets import BUILTIN_PRESETS, load_preset, preset_names
from pitypical.services.prism import prism_certificate
from pitypical.services.series import BivariateSeries, PowerSeries
from pitypical.services.witt import WittPair, make_carrier
from pitypical.utils.polynomials import parse_eisenstein, parse_integer_polynomial, parse_polynomial
from pitypical.utils.serialization import (
    bivariate_from_dict,
    bivariate_to_dict,
    certificate_from_dict,
    dump_json,
    element_from_dict,
    element_to_dict,
    laurent_to_dict,
    scalar_from_text,
    series_from_dict,
    series_to_dict,
    spec_from_dict,
    spec_to_dict,
    witt_pair_from_dict,
    witt_pair_to_dict,
)


def test_presets_expand_to_documented_specs() -> None:
    assert spec_to_dict(load_preset("q2")) == {"p": 2, "g": [0, 1], "E": [[-2], [1]], "M": 12}
    spec = load_preset("q2-ramified")
    assert (spec.e, spec.f) == (2, 1)
    unramified = load_preset("q4-unramified")
    assert (unramified.e, unramified.f, unramified.q) == (1, 2, 4)


def test_spec_round_trip(preset) -> None:
    assert spec_from_dict(spec_to_dict(preset)) == preset


def test_element_round_trip(preset, rng) -> None:
    for _ in range(100):
        a = OElement.random(preset, rng)
        restored = element_from_dict(preset, element_to_dict(a))
        assert restored == a
        assert restored.valid_prec == a.valid_prec


def test_series_round_trip_keeps_laurent_coefficients(q2) -> None:
    log = logarithm(default_frobenius(q2, 6), 6)
    document = json.loads(dump_json(series_to_dict(log)))
    restored = series_from_dict(q2, document)
    assert restored.laurent
    assert restored == log
    assert document["coeffs"][2] == laurent_to_dict(LaurentScalar(OElement.from_int(q2, -1), 1))


def test_series_accepts_integer_coefficients(q3) -> None:
    series = series_from_dict(q3, {"coeffs": [0, 3, 0, 1]})
    assert series == PowerSeries.from_coeffs(q3, [0, 3, 0, 1], 3)


def test_certificate_document_validates(q2) -> None:
    certificate = prism_certificate(default_frobenius(q2, 10), 2, 8)
    model = CertificateModel.model_validate(json.loads(dump_json(certificate.to_dict())))
    assert model.passed
    assert model.checked_mod_degree == 9


def test_field_spec_model_rejects_unknown_keys() -> None:
    with pytest.raises(ValidationError):
        FieldSpecModel.model_validate({"p": 2, "E": [[-2], [1]], "extra": 1})


def test_scalar_from_text(q2_ramified) -> None:
    assert scalar_from_text(q2_ramified, "5") == 5
    pi = scalar_from_text(q2_ramified, '{"coeffs": [[0], [1]]}')
    assert pi == OElement.pi(q2_ramified)


def test_parse_polynomial_with_pi(q2_ramified) -> None:
    pi = OElement.pi(q2_ramified)
    f = parse_polynomial(q2_ramified, "pi*T + T^2")
    assert f == PowerSeries.from_coeffs(q2_ramified, [0, pi, 1], 2)


def test_parse_field_polynomials() -> None:
    assert parse_eisenstein("x^2 - 2") == [[-2], [0], [1]]
    assert parse_integer_polynomial("y^2 + y + 1") == [1, 1, 1]


def test_parsed_non_eisenstein_is_rejected() -> None:
    from pitypical.services.field import make_field_spec

    with pytest.raises(NotEisenstein):
        make_field_spec(2, [0, 1], parse_eisenstein("x^2 - 4"), 12)


def test_preset_directory_extends_builtins(tmp_path) -> None:
    (tmp_path / "q5.json").write_text(json.dumps({"p": 5, "E": [[-5], [1]], "M": 8}), encoding="utf-8")
    (tmp_path / "broken.json").write_text("{not json", encoding="utf-8")
    names = preset_names(str(tmp_path))
    assert "q5" in names
    assert "broken" not in names
    assert set(BUILTIN_PRESETS) <= set(names)
    assert load_preset("q5", preset_dir=str(tmp_path)).q == 5


def test_unknown_preset() -> None:
    with pytest.raises(FieldSpecError):
        load_preset("q7")


def _random_laurent(spec, rng) -> LaurentScalar:
    return LaurentScalar(OElement.random(spec, rng), rng.randrange(4))


def _random_series(spec, rng, D: int) -> PowerSeries:
    coeffs = [
        _random_laurent(spec, rng) if rng.random() < 0.3 else OElement.random(spec, rng)
        for _ in range(rng.randrange(D + 2))
    ]
    return PowerSeries.from_coeffs(spec, coeffs, D)


def test_laurent_round_trip(preset, rng) -> None:
    for _ in range(100):
        value = _random_laurent(preset, rng)
        document = json.loads(dump_json(laurent_to_dict(value)))
        restored = series_from_dict(preset, {"coeffs": [document]}).coeffs[0]
        assert restored == value
        assert restored.denom_exp == value.denom_exp


def test_random_series_round_trip(preset, rng) -> None:
    for _ in range(100):
        series = _random_series(preset, rng, rng.randrange(6))
        restored = series_from_dict(preset, json.loads(dump_json(series_to_dict(series))))
        assert restored.D == series.D
        assert restored.laurent == series.laurent
        assert restored == series


def test_bivariate_round_trip(preset, rng) -> None:
    for _ in range(100):
        D = rng.randrange(5)
        terms = {
            (i, j): OElement.random(preset, rng)
            for i in range(D + 1)
            for j in range(D + 1 - i)
            if rng.random() < 0.5
        }
        series = BivariateSeries.from_terms(preset, D, terms)
        restored = bivariate_from_dict(preset, json.loads(dump_json(bivariate_to_dict(series))))
        assert restored.D == D
        assert restored == series


def test_group_law_document_reads_back(q2) -> None:
    law = build_group_law(default_frobenius(q2, 8), 8)
    restored = bivariate_from_dict(q2, json.loads(dump_json(bivariate_to_dict(law))))
    assert restored == law
    assert restored.coefficient(1, 1) == law.coefficient(1, 1)


def test_bivariate_accepts_integer_rows(q3) -> None:
    series = bivariate_from_dict(q3, {"D": 2, "coeffs": [[0, 1], [1]]})
    assert series == BivariateSeries.from_terms(q3, 2, {(0, 1): 1, (1, 0): 1})


def test_bivariate_rejects_other_variables(q3) -> None:
    with pytest.raises(ValueError):
        bivariate_from_dict(q3, {"vars": ["S", "T"], "D": 1, "coeffs": [[0, 1], [1]]})


@pytest.mark.parametrize("name", ["ofield", "series"])
def test_witt_pair_round_trip(preset, rng, name) -> None:
    carrier = make_carrier(name, preset, 4)
    for _ in range(100):
        pair = WittPair(carrier, carrier.random(rng), carrier.random(rng))
        document = json.loads(dump_json(witt_pair_to_dict(pair)))
        assert document["carrier"] == name
        restored = witt_pair_from_dict(preset, document)
        assert restored.carrier == carrier
        assert restored == pair


def test_zmod_witt_pair_round_trip(q3) -> None:
    carrier = make_carrier("zmod", q3)
    pair = WittPair.of(carrier, 4, -7)
    document = witt_pair_to_dict(pair)
    assert "D" not in document
    assert witt_pair_from_dict(q3, document) == pair


def test_witt_pair_rejects_unknown_keys(q2) -> None:
    with pytest.raises(ValidationError):
        witt_pair_from_dict(q2, {"carrier": "ofield", "a0": {"coeffs": [[1]]}, "a1": {"coeffs": [[0]]}, "b": 1})


@pytest.mark.parametrize("n", [1, 2, 3])
def test_certificate_round_trip(preset, n) -> None:
    frobenius = default_frobenius(preset, 10)
    certificate = prism_certificate(frobenius, n, 8)
    restored = certificate_from_dict(frobenius, json.loads(dump_json(certificate.to_dict())))
    assert restored.n == n
    assert restored.D == 8
    assert restored.cofactor == certificate.cofactor
    assert restored.holds()
    assert restored.to_dict() == certificate.to_dict()


def test_tampered_certificate_fails_recheck(q2) -> None:
    frobenius = default_frobenius(q2, 10)
    certificate = prism_certificate(frobenius, 2, 8)
    document = certificate.to_dict()
    document["cofactor"]["coeffs"][1] = element_to_dict(certificate.cofactor.coeffs[1] + 1)
    restored = certificate_from_dict(frobenius, document)
    assert not restored.holds()
