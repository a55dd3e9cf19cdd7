from __future__ import annotations

import logging
import random
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Dict, Iterable, List, Optional

from pitypical.config import DefaultConfig
from pitypical.errors import PiTypicalError
from pitypical.services.checks import CheckResult, all_passed

from .registry import SelfTestSuite, SuiteRegistry

logger = logging.getLogger(__name__)


def run_selftest(
    seed: int,
    jobs: Optional[int] = None,
    names: Optional[Iterable[str]] = None,
    inject_literal_witt: bool = False,
    degree: Optional[int] = None,
) -> Dict[str, Any]:
    """
    Run the registered suites and collect one report.

    Each suite draws from its own generator seeded by (seed, suite name), so
    the report does not depend on ``jobs`` or on the order suites finish in.
    """
    suites = SuiteRegistry.load_suites(names)
    if not suites:
        logger.error("No self-test suites could be loaded")
        return {"seed": seed, "suites": [], "pass": False}

    options: Dict[str, object] = {
        "degree": degree or DefaultConfig.SELFTEST_DEGREE,
        "literal_witt": inject_literal_witt,
    }
    jobs = max(1, jobs or DefaultConfig.SELFTEST_JOBS)
    logger.info("Starting self-test: %s suites, seed %s, %s jobs", len(suites), seed, jobs)

    if jobs == 1:
        reports = [_run_suite(suite, seed, options) for suite in suites]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(lambda suite: _run_suite(suite, seed, options), suites))

    passed = all(report["pass"] for report in reports)
    logger.info("Self-test finished: %s", "pass" if passed else "FAIL")
    return {"seed": seed, "suites": reports, "pass": passed}


def _run_suite(suite: SelfTestSuite, seed: int, options: Dict[str, object]) -> Dict[str, Any]:
    rng = random.Random(f"{seed}:{suite.name}")
    started = time.perf_counter()
    try:
        results: List[CheckResult] = suite.run(rng, options)
    except PiTypicalError as exc:
        logger.exception("Suite %s aborted", suite.name)
        results = [CheckResult("aborted", False, {"error": type(exc).__name__, "message": str(exc)})]

    passed = all_passed(results)
    logger.info(
        "Suite %s: %s checks, %s (%.1fs)",
        suite.name,
        len(results),
        "pass" if passed else "FAIL",
        time.perf_counter() - started,
    )
    return {"suite": suite.name, "pass": passed, "checks": [result.to_dict() for result in results]}
