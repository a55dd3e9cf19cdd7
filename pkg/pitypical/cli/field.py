from __future__ import annotations

import logging

import click

from pitypical.config import DefaultConfig
from pitypical.services.field import make_field_spec
from pitypical.services.presets import preset_documents
from pitypical.utils.polynomials import parse_eisenstein, parse_integer_polynomial

from .common import InputError, emit

logger = logging.getLogger(__name__)


@click.group("field")
def field_group() -> None:
    """Build and list field presentations o_L = W(k)[x]/(E)."""


@field_group.command("make")
@click.option("--p", "p", type=int, required=True, help="Residue characteristic.")
@click.option("--E", "eisenstein", required=True, help='Eisenstein polynomial, e.g. "x^2-2" or "x-2".')
@click.option("--g", "residual", default="y", show_default=True, help="Monic polynomial in y irreducible mod p.")
@click.option("--prec", type=int, default=None, help="Precision M (digits mod p).")
@click.option("--out", type=click.Path(dir_okay=False, writable=True), default=None)
def make_command(p: int, eisenstein: str, residual: str, prec, out) -> None:
    try:
        E = parse_eisenstein(eisenstein)
        g = parse_integer_polynomial(residual, "y")
    except (SyntaxError, TypeError, ValueError) as exc:
        raise InputError(f"cannot parse polynomial: {exc}") from exc
    spec = make_field_spec(p, g, E, prec or DefaultConfig.DEFAULT_PRECISION)
    logger.info("Built field with e=%s f=%s", spec.e, spec.f)
    emit(spec.describe(), out)


@field_group.command("presets")
@click.option("--out", type=click.Path(dir_okay=False, writable=True), default=None)
def presets_command(out) -> None:
    """Built-in presets plus those found in PITYPICAL_PRESET_DIR."""
    emit({"presets": preset_documents()}, out)
