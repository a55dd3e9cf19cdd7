from __future__ import annotations

import logging
import random

import click

from pitypical.services.checks import all_passed
from pitypical.services.witt import (
    CARRIER_OFIELD,
    CARRIER_SERIES,
    CARRIER_ZMOD,
    canonical_delta,
    delta_of_one_check,
    delta_of_variable_check,
    derived_rules_check,
    lift_reconstruction_check,
    make_carrier,
    ring_axiom_report,
    section_check,
    witt_mul,
    witt_mul_literal,
)

from .common import RunConfig, finish, frobenius_option, load_frobenius, run_options

logger = logging.getLogger(__name__)


@click.group("witt")
def witt_group() -> None:
    """Length-2 ramified Witt vectors."""


@witt_group.command("check")
@run_options
@click.option(
    "--carrier",
    type=click.Choice([CARRIER_ZMOD, CARRIER_OFIELD, CARRIER_SERIES]),
    default=CARRIER_OFIELD,
    show_default=True,
)
@click.option("--trials", type=click.IntRange(min=1), default=200, show_default=True)
@click.option("--literal", is_flag=True, help="Use the uncrossed multiplication rule.")
def check_command(run: RunConfig, carrier: str, trials: int, literal: bool) -> None:
    """Ring axioms and ghost-map laws on random triples; exit 1 with counterexamples on failure."""
    spec = run.field_spec()
    # series carriers default to a small truncation unless --deg is given
    D = run.deg if "deg" in run.model_fields_set else 8
    results = ring_axiom_report(
        make_carrier(carrier, spec, D), trials, run.seed, mul=witt_mul_literal if literal else witt_mul
    )
    passed = all_passed(results)
    logger.info("Witt laws over %s: %s", carrier, "pass" if passed else "FAIL")
    document = {
        "spec": spec.to_dict(),
        "carrier": carrier,
        "trials": trials,
        "seed": run.seed,
        "multiplication": "literal" if literal else "crossed",
        "checks": [result.to_dict() for result in results],
        "pass": passed,
    }
    finish(document, passed, run.out)


@click.group("delta")
def delta_group() -> None:
    """δ-structures on o_L[[T]]."""


@delta_group.command("check")
@run_options
@frobenius_option
@click.option("--trials", type=click.IntRange(min=1), default=10, show_default=True)
def delta_check_command(run: RunConfig, f_source: str, trials: int) -> None:
    """δ(g) = (g∘f − g^q)/π: section, derived rules, φ-reconstruction, δ(1) and δ(T)."""
    spec = run.field_spec()
    frobenius = load_frobenius(spec, f_source, run.deg)
    delta = canonical_delta(frobenius, run.deg)
    rng = random.Random(run.seed)
    pairs = [(delta.carrier.random(rng), delta.carrier.random(rng)) for _ in range(trials)]
    results = [
        delta_of_one_check(delta),
        delta_of_variable_check(delta, frobenius, run.deg),
        section_check(delta, pairs),
        derived_rules_check(delta, pairs),
        lift_reconstruction_check(delta, [a for a, _ in pairs]),
    ]
    passed = all_passed(results)
    document = {
        "spec": spec.to_dict(),
        "D": run.deg,
        "trials": trials,
        "seed": run.seed,
        "checks": [result.to_dict() for result in results],
        "pass": passed,
    }
    finish(document, passed, run.out)
