"""totgraph.commands.ring"""
import click

from . import RING, echo_json


@click.group()
def ring():
    """Finite commutative rings."""


@ring.command()
@click.argument("spec", type=RING)
@click.option("--json", "as_json", is_flag=True, help="Print the ring as JSON.")
def info(spec, as_json):
    """
    Order, zero-divisors, units, J(R) and the maximal ideals of SPEC.
    """
    if as_json:
        echo_json(spec.serialize())
        return
    labels = spec.labels
    click.echo(f"ring:           {spec}")
    click.echo(f"order:          {spec.order}")
    click.echo(f"blocks:         {', '.join(block.text for block in spec.descriptor.blocks)}")
    click.echo(f"zero-divisors:  {len(spec.zero_divisors)}")
    click.echo(f"units:          {len(spec.units)}")
    click.echo(f"J(R):           {{{', '.join(labels[j] for j in spec.jacobson)}}}")
    for ideal in spec.maximal_ideals:
        click.echo(
            f"maximal ideal:  {len(ideal)} elements, residue field of order "
            f"{ideal.residue_size} (characteristic {ideal.residue_char})"
        )
