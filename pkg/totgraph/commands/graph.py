"""totgraph.commands.graph"""
import click

from ..graph.export import to_dot, to_json
from ..graph.total import build_graph, structure_check_zideal
from ..io import save
from . import KIND, RING, echo_json


@click.group()
def graph():
    """Total graph T(Γ(R)) and its zero-divisor / regular subgraphs."""


@graph.command()
@click.option("--ring", "ring", type=RING, required=True, help="Ring spec.")
@click.option("--kind", type=KIND, default="total", show_default=True)
@click.option("--dot", "dot_path", type=click.Path(dir_okay=False), help="Write Graphviz DOT.")
@click.option("--json", "json_path", type=click.Path(dir_okay=False), help="Write JSON.")
def build(ring, kind, dot_path, json_path):  # pylint: disable=redefined-outer-name
    """Build a graph of a ring and export it."""
    built = build_graph(ring, kind)
    if dot_path:
        save(dot_path, to_dot(built, name=f"{kind} {ring}"))
    if json_path:
        save(json_path, to_json(built))
    click.echo(f"{kind} graph of {ring}: {built.vertex_count} vertices, {built.edge_count} edges")


@graph.command()
@click.option("--ring", "ring", type=RING, required=True, help="Ring spec.")
def structure(ring):  # pylint: disable=redefined-outer-name
    """Component structure of T(Γ(R)) when Z(R) is an ideal."""
    report = structure_check_zideal(ring)
    echo_json(report.dict())
    if not report.passed:
        raise click.ClickException(f"component structure of T(Γ({ring})) does not match")
