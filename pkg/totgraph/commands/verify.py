"""totgraph.commands.verify"""
import functools

import click

from ..catalog import generate_catalog
from ..config import get_settings
from ..services import suite
from ..services.verification import VerifyOptions
from ..services.verification.report import emit_report
from ..solvers import Budget
from . import echo_json


def suite_options(command):
    """Catalog, budget and output options shared by `verify` and `explore`."""
    options = [
        click.option("--pool", multiple=True, help="Pool block spec (repeatable)."),
        click.option("--max-order", type=int, default=None, help="Largest ring order."),
        click.option("--solver-cap", type=int, default=None, help="Largest order solved exactly."),
        click.option("--workers", type=int, default=None, help="Worker processes."),
        click.option("--timeout", type=float, default=None, help="Solver seconds per graph."),
        click.option("--report", type=click.Path(dir_okay=False), help="Write the JSON report."),
        click.option("--csv", "csv_path", type=click.Path(dir_okay=False), help="Write CSV."),
    ]
    return functools.reduce(lambda wrapped, option: option(wrapped), reversed(options), command)


# pylint: disable=too-many-arguments
def run_suite(name, pool, max_order, solver_cap, workers, timeout, report, csv_path):
    """Run a named suite over a generated catalog; exit code 1 iff any row is FAIL."""
    settings = get_settings()
    catalog = generate_catalog(pool or settings.total_pool, max_order or settings.max_order)
    budget = Budget(settings.solver_max_nodes, timeout or settings.solver_time_limit)
    options = VerifyOptions.from_settings(solver_cap=solver_cap, workers=workers, budget=budget)
    result = suite(name, options).run(catalog)
    if report:
        emit_report(result, report, "json")
    if csv_path:
        emit_report(result, csv_path, "csv")
    echo_json(result.summary.dict(by_alias=True))
    if result.summary.fail:
        raise click.exceptions.Exit(1)


@click.command()
@click.argument("which", type=click.Choice(["total", "reg"], case_sensitive=False))
@suite_options
def verify(which, **kwargs):
    """
    Certify the total-graph (total) or regular-graph (reg) results over a ring catalog.
    """
    run_suite(which.lower(), **kwargs)


@click.command()
@click.argument("which", type=click.Choice(["conjecture"], case_sensitive=False))
@suite_options
def explore(which, **kwargs):  # pylint: disable=unused-argument
    """
    Look for certificates on the rings no theorem covers.
    """
    run_suite("conjecture", **kwargs)
