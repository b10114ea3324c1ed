"""
totgraph.commands

Click command groups of the `totgraph` CLI and the parameter types they share.
"""
import json

import click

from ..graph.total import GRAPH_KINDS
from ..ring import build_ring


class RingParam(click.ParamType):
    """A ring spec such as ``Z2 x GF(4)``, built into a FiniteRing."""

    name = "ring"

    def convert(self, value, param, ctx):
        if not isinstance(value, str):
            return value
        return build_ring(value)


RING = RingParam()
KIND = click.Choice(sorted(GRAPH_KINDS), case_sensitive=False)


def echo_json(content):
    """Print content as indented JSON."""
    click.echo(json.dumps(content, indent=2))


from .color import color  # noqa: E402 pylint: disable=wrong-import-position
from .graph import graph  # noqa: E402 pylint: disable=wrong-import-position
from .latin import latin  # noqa: E402 pylint: disable=wrong-import-position
from .ring import ring  # noqa: E402 pylint: disable=wrong-import-position
from .solve import solve  # noqa: E402 pylint: disable=wrong-import-position
from .verify import explore, verify  # noqa: E402 pylint: disable=wrong-import-position

COMMANDS = (ring, graph, color, solve, latin, verify, explore)
