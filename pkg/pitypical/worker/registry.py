from __future__ import annotations

import logging
import random
from typing import Dict, Iterable, List, Optional, Protocol

from pitypical.services.checks import CheckResult

logger = logging.getLogger(__name__)


class SelfTestSuite(Protocol):
    """
    One family of invariants, checked over the built-in presets. ``run`` draws
    every sample from ``rng``, so a seed fixes the report.
    """

    name: str

    def run(self, rng: random.Random, options: Dict[str, object]) -> List[CheckResult]:
        ...


class SuiteRegistry:
    """
    Suites by name, in the order selftest reports them (sorted by name).

    The suite module is imported on first lookup and registers one instance
    of each suite.
    """

    _suites: Dict[str, SelfTestSuite] = {}

    @classmethod
    def register(cls, suite: SelfTestSuite) -> None:
        if suite.name in cls._suites:
            logger.debug("Replacing self-test suite %s", suite.name)
        cls._suites[suite.name] = suite

    @classmethod
    def get(cls, name: str) -> SelfTestSuite:
        try:
            return cls._suites[name]
        except KeyError as exc:
            known = ", ".join(sorted(cls._suites))
            raise KeyError(f"no self-test suite {name!r}; known suites: {known}") from exc

    @classmethod
    def names(cls) -> List[str]:
        cls._load()
        return sorted(cls._suites)

    @classmethod
    def load_suites(cls, names: Optional[Iterable[str]] = None) -> List[SelfTestSuite]:
        """The named suites, or all of them; unknown names are logged and skipped."""
        cls._load()
        wanted = sorted(names) if names else sorted(cls._suites)
        suites = []
        for name in wanted:
            try:
                suites.append(cls.get(name))
            except KeyError:
                logger.warning("Skipping unknown self-test suite %r", name)
        return suites

    @staticmethod
    def _load() -> None:
        # Lazy import to avoid circular dependencies
        from . import suites  # noqa: F401
