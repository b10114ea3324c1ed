"""totgraph.commands.solve"""
import click

from ..config import get_settings
from ..graph.total import build_graph
from ..solvers import Budget, chromatic_number, clique_number
from . import KIND, RING, echo_json


@click.command()
@click.option("--ring", "ring", type=RING, required=True, help="Ring spec.")
@click.option("--kind", type=KIND, default="total", show_default=True)
@click.option("--what", type=click.Choice(["chi", "omega"]), default="chi", show_default=True)
@click.option("--timeout", type=float, default=None, help="Time budget in seconds.")
@click.option("--max-nodes", type=int, default=None, help="Search node budget.")
def solve(ring, kind, what, timeout, max_nodes):
    """
    Exact chromatic or clique number of a graph of a ring.
    """
    settings = get_settings()
    budget = Budget(
        max_nodes or settings.solver_max_nodes,
        timeout if timeout is not None else settings.solver_time_limit,
    )
    target = build_graph(ring, kind)
    if what == "omega":
        echo_json(clique_number(target, budget).serialize())
    else:
        echo_json(chromatic_number(target, budget).serialize())
