"""
totgraph.main.py
"""
import logging

import click
import sentry_sdk

from . import __version__
from .commands import COMMANDS
from .config import get_settings
from .errors import TotgraphError

# ############
# CLI
# ############
LOGGER = logging.getLogger("cli")

SETTINGS = get_settings()

if SETTINGS.sentry_dsn:  # pragma: no cover
    LOGGER.info("Initializing Sentry error tracking")
    sentry_sdk.init(dsn=SETTINGS.sentry_dsn)


class TotgraphGroup(click.Group):
    """
    Command group that reports library errors as click errors (exit code 1).
    """

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except TotgraphError as exc:
            LOGGER.debug(f"{exc.__class__.__name__}: {exc}")
            raise click.ClickException(str(exc)) from exc


@click.group(cls=TotgraphGroup)
@click.version_option(__version__, prog_name="totgraph")
@click.option("-v", "--verbose", is_flag=True, help="Log debug messages.")
def cli(verbose):
    """
    Total graphs of finite commutative rings: constructions, exact solvers and certificates.
    """
    if verbose:
        logging.getLogger("totgraph").setLevel(logging.DEBUG)


for command in COMMANDS:
    cli.add_command(command)


def main():
    """Console script entry point."""
    cli()  # pylint: disable=no-value-for-parameter


# Running of the CLI.
if __name__ == "__main__":
    main()
