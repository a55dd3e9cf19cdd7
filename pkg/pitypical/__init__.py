from __future__ import annotations

import logging
import sys
from typing import Optional

import click

from .config import DefaultConfig


def create_cli() -> click.Group:
    """
    CLI factory so the console entry point and the tests share one command tree.
    """
    from .cli import cli

    return cli


def configure_logging(level: Optional[str] = None) -> None:
    """
    Log to stderr; stdout is reserved for the JSON document a command prints.
    """
    log_level = (level or DefaultConfig.LOG_LEVEL).upper()
    formatter = logging.Formatter(
        "[%(asctime)s] %(levelname)s in %(module)s: %(message)s"
    )

    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(formatter)
    handler.setLevel(log_level)

    logger = logging.getLogger(__name__)
    logger.setLevel(log_level)
    logger.handlers = []
    logger.addHandler(handler)
    logger.propagate = False
