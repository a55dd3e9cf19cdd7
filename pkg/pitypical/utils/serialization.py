from __future__ import annotations

import json
from typing import TYPE_CHECKING, Any, Dict, List, Union

from pitypical.models import (
    BivariateModel,
    CertificateModel,
    ElementModel,
    FieldSpecModel,
    LaurentModel,
    SeriesModel,
    WittPairModel,
)
from pitypical.services.field import LaurentScalar, LocalFieldSpec, OElement, make_field_spec
from pitypical.services.series import BivariateSeries, PowerSeries

if TYPE_CHECKING:
    from pitypical.services.lubin_tate import FrobeniusSeries
    from pitypical.services.prism import PrismCertificate
    from pitypical.services.witt import WittPair


# -- to JSON ------------------------------------------------------------------


def spec_to_dict(spec: LocalFieldSpec) -> Dict[str, Any]:
    return spec.to_dict()


def element_to_dict(value: OElement) -> Dict[str, Any]:
    return {"coeffs": [list(row) for row in value.rows()], "valid_prec": value.valid_prec}


def laurent_to_dict(value: LaurentScalar) -> Dict[str, Any]:
    return {
        "num": [list(row) for row in value.num.rows()],
        "denom_exp": value.denom_exp,
        "valid_prec": value.num.valid_prec,
    }


def coefficient_to_dict(value: Union[OElement, LaurentScalar]) -> Dict[str, Any]:
    if isinstance(value, LaurentScalar):
        return laurent_to_dict(value)
    return element_to_dict(value)


def series_to_dict(series: PowerSeries) -> Dict[str, Any]:
    return {
        "var": series.var,
        "D": series.D,
        "coeffs": [coefficient_to_dict(c) for c in series.coeffs],
    }


def bivariate_to_dict(series: BivariateSeries) -> Dict[str, Any]:
    """``coeffs[i][j]`` is the coefficient of X^i Y^j."""
    return {
        "vars": ["X", "Y"],
        "D": series.D,
        "coeffs": [[element_to_dict(c) for c in row] for row in series.rows],
    }


def witt_pair_to_dict(pair: "WittPair") -> Dict[str, Any]:
    document: Dict[str, Any] = {"carrier": pair.carrier.name}
    if hasattr(pair.carrier, "D"):
        document["D"] = pair.carrier.D
    document.update(pair.to_json())
    return document


def dump_json(document: Any) -> str:
    return json.dumps(document, indent=2, ensure_ascii=False, sort_keys=False)


# -- from JSON ----------------------------------------------------------------


def spec_from_dict(data: Dict[str, Any]) -> LocalFieldSpec:
    model = FieldSpecModel.model_validate(data)
    return make_field_spec(model.p, model.g, model.E, model.M)


def element_from_model(spec: LocalFieldSpec, model: Union[int, ElementModel]) -> OElement:
    if isinstance(model, int):
        return OElement.from_int(spec, model)
    return OElement.from_rows(spec, model.coeffs, model.valid_prec)


def element_from_dict(spec: LocalFieldSpec, data: Union[int, Dict[str, Any]]) -> OElement:
    if isinstance(data, int):
        return OElement.from_int(spec, data)
    return element_from_model(spec, ElementModel.model_validate(data))


def laurent_from_model(spec: LocalFieldSpec, model: LaurentModel) -> LaurentScalar:
    return LaurentScalar(OElement.from_rows(spec, model.num, model.valid_prec), model.denom_exp)


def series_from_model(spec: LocalFieldSpec, model: SeriesModel) -> PowerSeries:
    coeffs: List[Union[OElement, LaurentScalar]] = []
    for item in model.coeffs:
        if isinstance(item, LaurentModel):
            coeffs.append(laurent_from_model(spec, item))
        else:
            coeffs.append(element_from_model(spec, item))
    D = len(coeffs) - 1 if model.D is None else model.D
    return PowerSeries.from_coeffs(spec, coeffs, D, model.var)


def series_from_dict(spec: LocalFieldSpec, data: Dict[str, Any]) -> PowerSeries:
    return series_from_model(spec, SeriesModel.model_validate(data))


def bivariate_from_model(spec: LocalFieldSpec, model: BivariateModel) -> BivariateSeries:
    """Missing entries of a short row are zero; entries past total degree D are dropped."""
    if model.vars != ["X", "Y"]:
        raise ValueError(f"bivariate series must be in X, Y, got {model.vars}")
    terms = {
        (i, j): element_from_model(spec, item)
        for i, row in enumerate(model.coeffs)
        for j, item in enumerate(row)
    }
    return BivariateSeries.from_terms(spec, model.D, terms)


def bivariate_from_dict(spec: LocalFieldSpec, data: Dict[str, Any]) -> BivariateSeries:
    return bivariate_from_model(spec, BivariateModel.model_validate(data))


def witt_pair_from_dict(spec: LocalFieldSpec, data: Dict[str, Any]) -> "WittPair":
    # Lazy import to avoid circular dependencies
    from pitypical.services.witt import WittPair, make_carrier

    model = WittPairModel.model_validate(data)
    if model.D is None:
        carrier = make_carrier(model.carrier, spec)
    else:
        carrier = make_carrier(model.carrier, spec, model.D)
    return WittPair(carrier, carrier.from_json(model.a0), carrier.from_json(model.a1))


def certificate_from_dict(frobenius: "FrobeniusSeries", data: Dict[str, Any]) -> "PrismCertificate":
    """
    Rebuild a certificate document over the Frobenius series it was made for.

    The stored ``pass`` flag is not trusted; call ``holds()`` on the result.
    """
    # Lazy import to avoid circular dependencies
    from pitypical.services.prism import PrismCertificate

    model = CertificateModel.model_validate(data)
    spec = frobenius.spec
    return PrismCertificate(
        spec=spec,
        frobenius=frobenius,
        n=model.n,
        q_n=series_from_model(spec, model.q_n),
        q_n1=series_from_model(spec, model.q_n1),
        cofactor=series_from_model(spec, model.cofactor),
        D=model.checked_mod_degree - 1,
    )


def scalar_from_text(spec: LocalFieldSpec, text: str) -> OElement:
    """An integer literal or a JSON element document."""
    text = text.strip()
    try:
        return OElement.from_int(spec, int(text))
    except ValueError:
        pass
    return element_from_dict(spec, json.loads(text))
