"""
Worker package running the self-test suites.
"""

from .registry import SelfTestSuite, SuiteRegistry
from .tasks import run_selftest

__all__ = ["SelfTestSuite", "SuiteRegistry", "run_selftest"]
