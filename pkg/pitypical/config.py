from __future__ import annotations

import os
from pathlib import Path

from dotenv import load_dotenv


BASE_DIR = Path(__file__).resolve().parent.parent
ENV_PATH = BASE_DIR / ".env"

# Load environment variables as early as possible for both the CLI and the self-test worker.
load_dotenv(dotenv_path=ENV_PATH, override=False)


class DefaultConfig:
    LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")

    # Directory holding extra field presets as <name>.json
    PRESET_DIR = os.getenv("PITYPICAL_PRESET_DIR", "")

    DEFAULT_DEGREE = int(os.getenv("PITYPICAL_DEFAULT_DEGREE", "64"))
    DEFAULT_PRECISION = int(os.getenv("PITYPICAL_DEFAULT_PRECISION", "12"))
    DEFAULT_SEED = int(os.getenv("PITYPICAL_DEFAULT_SEED", "0"))

    # Truncation used by the self-test suites that work with bivariate series
    SELFTEST_DEGREE = int(os.getenv("PITYPICAL_SELFTEST_DEGREE", "16"))
    SELFTEST_JOBS = int(os.getenv("PITYPICAL_SELFTEST_JOBS", "1"))

    # Precision escalation: attempts before a PrecisionExhausted error is surfaced
    GUARD_ATTEMPTS = int(os.getenv("PITYPICAL_GUARD_ATTEMPTS", "3"))
