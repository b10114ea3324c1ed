"""totgraph.commands.latin"""
import click

from ..latin import build_latin_sum, build_latin_sum_reg, is_latin_sum
from . import RING, echo_json


@click.command()
@click.option("--f1", "first", type=RING, required=True, help="Row field.")
@click.option("--f2", "second", type=RING, required=True, help="Column field.")
@click.option("--reg", is_flag=True, help="Nonzero labels only (char(F1) = 2).")
@click.option("--json", "as_json", is_flag=True, help="Print the array as JSON.")
def latin(first, second, reg, as_json):
    """
    Latin-sum array with F1 on the rows and F2 on the columns.
    """
    array = build_latin_sum_reg(first, second) if reg else build_latin_sum(first, second)
    if as_json:
        echo_json(array.serialize())
        return
    names = array.col_labels.names
    width = max(len(name) for name in names + array.row_labels.names + ("",)) + 1
    entries = array.display_entries()
    click.echo(" " * width + "".join(name.rjust(width) for name in names))
    for name, row in zip(array.row_labels.names, entries):
        click.echo(name.rjust(width) + "".join(entry.rjust(width) for entry in row))
    verdict = is_latin_sum(array)
    click.echo(
        f"{array.construction}: {array.alphabet_size} symbols, "
        f"Latin-sum: {verdict.valid}" + ("" if verdict.valid else f" {verdict.witness}")
    )
