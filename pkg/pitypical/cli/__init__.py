"""
Command-line surface. Every command writes exactly one JSON document.

Exit codes: 0 on success, 1 when a computation or check fails (the JSON
document says why), 2 on usage and input errors.
"""
from __future__ import annotations

import logging
from typing import Any

import click
from pydantic import ValidationError

from pitypical import configure_logging
from pitypical.config import DefaultConfig
from pitypical.errors import PiTypicalError

from .common import InputError, emit, validation_message
from .field import field_group
from .lubin_tate import lt_group
from .prism import prism_group
from .selftest import selftest_command
from .theta import theta_group
from .witt import delta_group, witt_group

logger = logging.getLogger(__name__)


class PiTypicalGroup(click.Group):
    """Turns library errors into a JSON error document with exit code 1."""

    def invoke(self, ctx: click.Context) -> Any:
        try:
            return super().invoke(ctx)
        except PiTypicalError as exc:
            logger.error("%s: %s", type(exc).__name__, exc)
            emit({"error": type(exc).__name__, "message": str(exc), "pass": False})
            ctx.exit(1)
        except ValidationError as exc:
            raise InputError(validation_message(exc)) from exc


@click.group(cls=PiTypicalGroup)
@click.option("--log-level", default=None, help="Overrides LOG_LEVEL.")
def cli(log_level) -> None:
    """Lubin–Tate laws, ramified Witt vectors, θ_k and o_L-typical prisms."""
    configure_logging(log_level or DefaultConfig.LOG_LEVEL)


for command in (field_group, lt_group, witt_group, delta_group, theta_group, prism_group, selftest_command):
    cli.add_command(command)

__all__ = ["cli"]
