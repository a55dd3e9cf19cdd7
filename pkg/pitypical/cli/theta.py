from __future__ import annotations

import random
from typing import Optional

import click
from pydantic import ValidationError

from pitypical.models import PointsModel
from pitypical.services.field import OElement
from pitypical.services.theta import theta_eval_check, theta_poly
from pitypical.utils.serialization import element_from_model, series_to_dict

from .common import InputError, RunConfig, emit, finish, read_json, run_options, validation_message


@click.group("theta")
def theta_group() -> None:
    """The numerical polynomials θ_k."""


@theta_group.command("poly")
@run_options
@click.option("--k", "k", type=click.IntRange(min=0), required=True)
def poly_command(run: RunConfig, k: int) -> None:
    spec = run.field_spec()
    theta = theta_poly(spec, k)
    emit({"spec": spec.to_dict(), "k": k, "degree": theta.degree(), "theta": series_to_dict(theta.poly)}, run.out)


@theta_group.command("eval")
@run_options
@click.option("--k", "k", type=click.IntRange(min=0), required=True)
@click.option("--points", "points_path", type=click.Path(dir_okay=False), default=None, help="Points JSON file.")
@click.option("--random", "count", type=click.IntRange(min=1), default=None, help="Number of random points.")
def eval_command(run: RunConfig, k: int, points_path: Optional[str], count: Optional[int]) -> None:
    """θ_k at each point; exit 1 if some value is not integral."""
    if (points_path is None) == (count is None):
        raise InputError("give exactly one of --points and --random")
    spec = run.field_spec()
    if points_path:
        try:
            model = PointsModel.model_validate(read_json(points_path))
        except ValidationError as exc:
            raise InputError(f"{points_path}: {validation_message(exc)}") from exc
        points = [element_from_model(spec, point) for point in model.points]
    else:
        rng = random.Random(run.seed)
        points = [OElement.random(spec, rng) for _ in range(count)]

    check = theta_eval_check(spec, k, points)
    document = {"spec": spec.to_dict(), "k": k, "seed": run.seed, **check.to_dict()}
    finish(document, check.passed, run.out)
