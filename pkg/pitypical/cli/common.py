"""Shared option handling, input loading and JSON emission for the command groups."""
from __future__ import annotations

import functools
import json
import logging
import os
from tokenize import TokenError
from typing import Any, Callable, Optional

import click
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator
from sympy.polys.polyerrors import PolynomialError

from pitypical.config import DefaultConfig
from pitypical.services.field import LocalFieldSpec
from pitypical.services.lubin_tate import FrobeniusSeries, default_frobenius, validate_frobenius_series
from pitypical.services.presets import load_preset
from pitypical.utils.polynomials import parse_polynomial
from pitypical.utils.serialization import dump_json, series_from_dict, spec_from_dict

logger = logging.getLogger(__name__)

DEFAULT_PRESET = "q2"
DEFAULT_F = "default"


class InputError(click.ClickException):
    """Malformed input files or flag values; reported on stderr with exit code 2."""

    exit_code = 2


class RunConfig(BaseModel):
    """Flags shared by every computing command."""

    model_config = ConfigDict(extra="forbid")

    preset: Optional[str] = None
    spec_path: Optional[str] = None
    deg: int = Field(default_factory=lambda: DefaultConfig.DEFAULT_DEGREE, ge=1)
    prec: Optional[int] = Field(default=None, ge=2)
    seed: int = Field(default_factory=lambda: DefaultConfig.DEFAULT_SEED)
    out: Optional[str] = None

    @model_validator(mode="after")
    def _one_field_source(self) -> "RunConfig":
        if self.preset and self.spec_path:
            raise ValueError("--preset and --spec are mutually exclusive")
        if not self.spec_path and not self.preset:
            self.preset = DEFAULT_PRESET
        return self

    def field_spec(self) -> LocalFieldSpec:
        if self.spec_path:
            spec = spec_from_dict(read_json(self.spec_path))
            return spec.with_precision(self.prec) if self.prec else spec
        return load_preset(self.preset, M=self.prec)


def validation_message(exc: ValidationError) -> str:
    parts = []
    for error in exc.errors():
        location = ".".join(str(item) for item in error["loc"]) or "document"
        parts.append(f"{location}: {error['msg']}")
    return "; ".join(parts)


def read_json(path: str) -> Any:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from exc


_RUN_OPTIONS = (
    click.option("--preset", default=None, help="Built-in or PITYPICAL_PRESET_DIR field preset."),
    click.option("--spec", "spec_path", type=click.Path(dir_okay=False), default=None, help="LocalFieldSpec JSON file."),
    click.option("--deg", type=int, default=None, help="Truncation degree D."),
    click.option("--prec", type=int, default=None, help="Precision M (digits mod p)."),
    click.option("--seed", type=int, default=None, help="Random seed."),
    click.option("--out", type=click.Path(dir_okay=False, writable=True), default=None, help="Write the JSON here instead of stdout."),
)


def run_options(func: Callable[..., Any]) -> Callable[..., Any]:
    """Add the shared flags and hand the command a validated RunConfig."""

    @functools.wraps(func)
    def wrapper(**kwargs: Any) -> Any:
        flags = {key: kwargs.pop(key) for key in ("preset", "spec_path", "deg", "prec", "seed", "out")}
        try:
            run = RunConfig.model_validate({key: value for key, value in flags.items() if value is not None})
        except ValidationError as exc:
            raise InputError(validation_message(exc)) from exc
        return func(run, **kwargs)

    for option in reversed(_RUN_OPTIONS):
        wrapper = option(wrapper)
    return wrapper


def frobenius_option(func: Callable[..., Any]) -> Callable[..., Any]:
    return click.option(
        "--f",
        "f_source",
        default=DEFAULT_F,
        show_default=True,
        help="'default' for πT + T^q, a series JSON file, or a polynomial like 'pi*T + T^2'.",
    )(func)


def load_frobenius(spec: LocalFieldSpec, source: str, D: int) -> FrobeniusSeries:
    """'default', a series JSON file, or a polynomial such as 'pi*T + T^2'."""
    if source == DEFAULT_F:
        return default_frobenius(spec, D)
    if not os.path.isfile(source) and not source.endswith(".json"):
        try:
            series = parse_polynomial(spec, source, D)
        except (SyntaxError, TokenError, TypeError, ValueError, AttributeError, PolynomialError) as exc:
            raise InputError(f"--f: {source!r} is neither a file nor a polynomial in T: {exc}") from exc
        return validate_frobenius_series(
            series, spec, exact=True, builder=lambda target, degree: parse_polynomial(target, source, degree)
        )
    try:
        series = series_from_dict(spec, read_json(source))
    except ValidationError as exc:
        raise InputError(f"{source}: {validation_message(exc)}") from exc
    return validate_frobenius_series(series, spec)


def emit(document: Any, out: Optional[str] = None) -> None:
    """One JSON document per invocation, to stdout or to ``out``."""
    text = dump_json(document)
    if out:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text + "\n")
        logger.info("Wrote %s", out)
    else:
        click.echo(text)


def finish(document: Any, passed: bool, out: Optional[str] = None) -> None:
    emit(document, out)
    if not passed:
        click.get_current_context().exit(1)
