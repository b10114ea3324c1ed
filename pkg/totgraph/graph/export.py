"""totgraph.graph.export.py"""
from ..models import GraphExport
from . import Graph

# Fill colors cycled over color ids in DOT output.
PALETTE = (
    "#e6194b",
    "#3cb44b",
    "#ffe119",
    "#4363d8",
    "#f58231",
    "#911eb4",
    "#46f0f0",
    "#f032e6",
    "#bcf60c",
    "#fabebe",
    "#008080",
    "#e6beff",
)


def to_json(graph: Graph) -> dict:
    """
    {n, edges, labels} with edges between vertex positions.
    """
    return GraphExport(
        n=graph.vertex_count,
        edges=[[u, v] for u, v in graph.edges()],
        labels=graph.labels,
    ).dict()


def to_dot(graph: Graph, coloring=None, name: str = "G") -> str:
    """
    Graphviz text; with a coloring, every node gets a `color` id and a fill color.
    """
    lines = [f'graph "{name}" {{', "  node [style=filled, fillcolor=white];"]
    for position, label in enumerate(graph.labels):
        attrs = [f'label="{label}"']
        if coloring is not None:
            color = int(coloring.colors[position])
            attrs.append(f"color_id={color}")
            attrs.append(f'fillcolor="{PALETTE[color % len(PALETTE)]}"')
        lines.append(f"  {position} [{', '.join(attrs)}];")
    for u, v in graph.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
