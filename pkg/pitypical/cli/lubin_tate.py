from __future__ import annotations

import logging

import click

from pitypical.services.lubin_tate import (
    build_endomorphism,
    build_group_law,
    f_model,
    genus_cp,
    honda_model,
    logarithm,
)
from pitypical.services.lubin_tate.models import SOURCE_F, SOURCE_HONDA
from pitypical.utils.serialization import (
    bivariate_to_dict,
    element_to_dict,
    laurent_to_dict,
    scalar_from_text,
    series_to_dict,
)

from .common import InputError, RunConfig, emit, frobenius_option, load_frobenius, run_options

logger = logging.getLogger(__name__)


@click.group("lt")
def lt_group() -> None:
    """Lubin–Tate group laws, endomorphisms, logarithms and the genus."""


@lt_group.command("group-law")
@run_options
@frobenius_option
def group_law_command(run: RunConfig, f_source: str) -> None:
    spec = run.field_spec()
    frobenius = load_frobenius(spec, f_source, run.deg)
    law = build_group_law(frobenius, run.deg)
    emit({"spec": spec.to_dict(), "f": series_to_dict(frobenius.series), "law": bivariate_to_dict(law)}, run.out)


@lt_group.command("endo")
@run_options
@frobenius_option
@click.option("--a", "scalar", required=True, help="Integer or element JSON.")
def endo_command(run: RunConfig, f_source: str, scalar: str) -> None:
    spec = run.field_spec()
    try:
        a = scalar_from_text(spec, scalar)
    except ValueError as exc:
        raise InputError(f"--a: {exc}") from exc
    frobenius = load_frobenius(spec, f_source, run.deg)
    series = build_endomorphism(frobenius, a, run.deg)
    emit({"spec": spec.to_dict(), "a": element_to_dict(a), "endomorphism": series_to_dict(series)}, run.out)


@lt_group.command("log")
@run_options
@frobenius_option
def log_command(run: RunConfig, f_source: str) -> None:
    spec = run.field_spec()
    frobenius = load_frobenius(spec, f_source, run.deg)
    emit({"spec": spec.to_dict(), "log": series_to_dict(logarithm(frobenius, run.deg))}, run.out)


@lt_group.command("genus")
@run_options
@frobenius_option
@click.option("--m", "m", type=int, required=True, help="Dimension of CP^m.")
@click.option("--model", type=click.Choice([SOURCE_HONDA, SOURCE_F]), default=SOURCE_HONDA, show_default=True)
def genus_command(run: RunConfig, f_source: str, m: int, model: str) -> None:
    if m < 0:
        raise InputError("--m must be non-negative")
    spec = run.field_spec()
    D = max(m + 1, spec.q)
    if model == SOURCE_HONDA:
        formal_group = honda_model(spec, D, law_degree=2)
    else:
        formal_group = f_model(load_frobenius(spec, f_source, D), D, law_degree=2)
    value = genus_cp(formal_group, m)
    logger.info("genus(CP^%s) over the %s model computed", m, model)
    emit({"spec": spec.to_dict(), "model": model, "m": m, "value": laurent_to_dict(value)}, run.out)
