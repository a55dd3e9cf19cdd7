from __future__ import annotations

import logging
from typing import Callable, Optional, TypeVar

from tenacity import Retrying, before_sleep_log, retry_if_exception_type, stop_after_attempt

from pitypical.config import DefaultConfig
from pitypical.errors import DivisionObstruction, PrecisionExhausted

logger = logging.getLogger(__name__)

T = TypeVar("T")


def guard_digits(D: int) -> int:
    """Extra p-adic digits for a solver that divides by π once per q-fold degree step."""
    return D.bit_length() + 2


def escalate(
    compute: Callable[[int], T],
    base_guard: int,
    attempts: Optional[int] = None,
) -> T:
    """
    Run ``compute(guard)`` and retry with the guard doubled whenever it runs out of digits.
    """
    attempts = attempts or DefaultConfig.GUARD_ATTEMPTS
    for attempt in Retrying(
        stop=stop_after_attempt(attempts),
        retry=retry_if_exception_type((PrecisionExhausted, DivisionObstruction)),
        before_sleep=before_sleep_log(logger, logging.DEBUG),
        reraise=True,
    ):
        with attempt:
            guard = base_guard * 2 ** (attempt.retry_state.attempt_number - 1)
            if attempt.retry_state.attempt_number > 1:
                logger.debug("Retrying with %s guard digits", guard)
            return compute(guard)
    raise AssertionError("unreachable")  # pragma: no cover
