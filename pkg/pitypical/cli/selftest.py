from __future__ import annotations

from typing import Optional, Tuple

import click

from pitypical.config import DefaultConfig
from pitypical.worker import SuiteRegistry, run_selftest

from .common import InputError, finish


@click.command("selftest")
@click.option("--seed", type=int, default=None, help="Seed for every suite.")
@click.option("--jobs", type=click.IntRange(min=1), default=None, help="Suites run concurrently.")
@click.option("--suite", "suites", multiple=True, help="Run only the named suites.")
@click.option("--deg", type=click.IntRange(min=2), default=None, help="Truncation for bivariate suites.")
@click.option("--inject-literal-witt", is_flag=True, help="Swap in the uncrossed Witt multiplication.")
@click.option("--out", type=click.Path(dir_okay=False, writable=True), default=None)
def selftest_command(
    seed: Optional[int],
    jobs: Optional[int],
    suites: Tuple[str, ...],
    deg: Optional[int],
    inject_literal_witt: bool,
    out: Optional[str],
) -> None:
    """Run the invariant suites and print one deterministic report."""
    unknown = sorted(set(suites) - set(SuiteRegistry.names()))
    if unknown:
        raise InputError(f"unknown suites: {', '.join(unknown)}; available: {', '.join(SuiteRegistry.names())}")
    report = run_selftest(
        seed if seed is not None else DefaultConfig.DEFAULT_SEED,
        jobs=jobs,
        names=suites or None,
        inject_literal_witt=inject_literal_witt,
        degree=deg,
    )
    finish(report, report["pass"], out)
