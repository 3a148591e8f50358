"""
Main CLI entry point for pimsim.

Usage:
    pimsim run --bench qrng:4 --engine pim --passes gm,rs
    pimsim run --bench bv:4 --secret 111 --engine oracle
    pimsim verify --bench bv:8 --passes gm,rs --tol 1e-9
    pimsim transpile --bench xor:8 --passes rs
    pimsim schema run

Exit codes:
    0  success
    1  input errors (parse diagnostics, bad selector, bad config)
    2  capacity or memory-budget violations
    3  internal contract violations (overflow, verification mismatch)
"""

from __future__ import annotations

import logging
from typing import Any

import click
from dotenv import load_dotenv

from pimsim import __version__
from pimsim.errors import (
    BenchmarkError,
    CapacityError,
    CircuitValidationError,
    DpuConfigError,
    MemoryBudgetError,
    PimSimError,
    QasmParseError,
)
from pimsim.utils.logger import get_logger, setup_logging

load_dotenv()  # PIMSIM_DPU_CONFIG, PIMSIM_LOG_DIR, PIMSIM_LOG_LEVEL may live in .env

logger = get_logger(__name__)

INPUT_ERRORS = (CircuitValidationError, BenchmarkError, QasmParseError, DpuConfigError)
CAPACITY_ERRORS = (CapacityError, MemoryBudgetError)


def exit_code_for(error: BaseException) -> int:
    if isinstance(error, INPUT_ERRORS):
        return 1
    if isinstance(error, CAPACITY_ERRORS):
        return 2
    if isinstance(error, PimSimError):
        return 3
    return 1


class PimsimGroup(click.Group):
    """Click group that turns pimsim errors into the documented exit codes."""

    def invoke(self, ctx: click.Context) -> Any:
        try:
            return super().invoke(ctx)
        except QasmParseError as e:
            for diagnostic in e.diagnostics:
                click.echo(str(diagnostic), err=True)
            ctx.exit(exit_code_for(e))
        except (PimSimError, ValueError, OSError) as e:
            logger.debug("command failed", exc_info=True)
            click.echo(f"error: {e}", err=True)
            ctx.exit(exit_code_for(e))


@click.group(cls=PimsimGroup)
@click.version_option(version=__version__)
@click.option("-v", "--verbose", count=True, help="Console log level: -v INFO, -vv DEBUG.")
def cli(verbose: int) -> None:
    """pimsim - exact integer state-vector simulation on a modelled PIM system."""
    console = {0: None, 1: logging.INFO}.get(verbose, logging.DEBUG)
    setup_logging(console_level=console)


# Import commands after cli is defined to avoid circular imports
from .commands import run, schema, transpile, verify  # noqa: E402

cli.add_command(run.run)
cli.add_command(verify.verify)
cli.add_command(transpile.transpile)
cli.add_command(schema.schema)


def main() -> None:
    """Main entry point for the CLI."""
    cli()


if __name__ == "__main__":
    main()
