"""totgraph.commands.color"""
import click

from ..coloring import verify_coloring
from ..coloring.rings import color_graph
from ..graph.export import to_dot
from ..io import save
from . import KIND, RING, echo_json


@click.command()
@click.option("--ring", "ring", type=RING, required=True, help="Ring spec.")
@click.option("--kind", type=KIND, default="total", show_default=True)
@click.option("--dot", "dot_path", type=click.Path(dir_okay=False), help="Write colored DOT.")
@click.option("--json", "json_path", type=click.Path(dir_okay=False), help="Write JSON.")
def color(ring, kind, dot_path, json_path):
    """
    Color a graph of a ring with the matching construction and check it.
    """
    coloring = color_graph(ring, kind)
    verdict = verify_coloring(coloring.graph, coloring)
    content = coloring.serialize(ring=str(ring), graph_kind=kind)
    if json_path:
        save(json_path, content)
    if dot_path:
        save(dot_path, to_dot(coloring.graph, coloring, name=f"{kind} {ring}"))
    if not (json_path or dot_path):
        echo_json(content)
    click.echo(f"{coloring.k} colors ({coloring.provenance.value}), proper: {verdict.ok}")
    if not verdict.ok:
        raise click.ClickException(f"monochromatic edge {verdict.witness}")
