"""totgraph.io.py"""
import csv
import io
import json
import pathlib
from typing import Dict, Iterable, List, Sequence, Union


def save(
    path: Union[str, pathlib.Path],
    content: Union[str, Dict, List],
    write_mode: str = "w",
    indent: int = 2,
    **json_dumps_kwargs,
) -> pathlib.Path:
    """Save content to a file. If content is a dictionary, use json.dumps()."""
    path = pathlib.Path(path)
    if isinstance(content, (dict, list)):
        content = json.dumps(content, indent=indent, **json_dumps_kwargs) + "\n"
    with open(path, mode=write_mode, newline="") as f_out:
        f_out.write(content)
    return path


def load(path: Union[str, pathlib.Path], **json_kwargs) -> Union[str, Dict, List]:
    """Loads content from a file; '.json' files are parsed with json.load()."""
    path = pathlib.Path(path)
    with open(path) as f_in:
        if path.suffix == ".json":
            return json.load(f_in, **json_kwargs)
        return f_in.read()


def to_csv(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    """Render rows as CSV text with a fixed line terminator."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def load_csv(path: Union[str, pathlib.Path]) -> List[Dict[str, str]]:
    """Parse a CSV file written by `to_csv` into a list of dict rows."""
    with open(path, newline="") as f_in:
        return list(csv.DictReader(f_in))
