from __future__ import annotations

import logging

import click

from pitypical.services.checks import all_passed, failures
from pitypical.services.prism import compute_qn, verify_prism_condition
from pitypical.utils.serialization import series_to_dict

from .common import RunConfig, emit, finish, frobenius_option, load_frobenius, run_options

logger = logging.getLogger(__name__)


@click.group("prism")
def prism_group() -> None:
    """The prism (o_L[[T]], (q_n)) and its membership certificates."""


@prism_group.command("qn")
@run_options
@frobenius_option
@click.option("--n", "n", type=click.IntRange(min=1), required=True)
def qn_command(run: RunConfig, f_source: str, n: int) -> None:
    spec = run.field_spec()
    frobenius = load_frobenius(spec, f_source, run.deg + 2)
    emit({"spec": spec.to_dict(), "n": n, "q_n": series_to_dict(compute_qn(frobenius, n, run.deg))}, run.out)


@prism_group.command("verify")
@run_options
@frobenius_option
@click.option("--n", "n", type=click.IntRange(min=1), required=True)
def verify_command(run: RunConfig, f_source: str, n: int) -> None:
    """φ-image, certificate, constant term, leading term and quotient clauses for q_n."""
    spec = run.field_spec()
    frobenius = load_frobenius(spec, f_source, run.deg + 2)
    results = verify_prism_condition(frobenius, n, run.deg)
    passed = all_passed(results)
    if not passed:
        logger.warning("Prism clauses failing for n=%s: %s", n, ", ".join(failures(results)))
    document = {
        "spec": spec.to_dict(),
        "n": n,
        "D": run.deg,
        "checks": [result.to_dict() for result in results],
        "pass": passed,
    }
    finish(document, passed, run.out)
