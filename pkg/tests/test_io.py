"""test.test_io.py"""
import string

import pytest

import totgraph.io

IO_PARAMS = (
    "name, content, kwargs",
    [
        ("test_file.txt", string.ascii_lowercase, {}),
        ("test_json_file.json", {"a": 0, "b": 1, "c": 2}, {}),
        (
            "test_custom_json.json",
            {"z": -1, "b": 1, "y": -2, "a": 0},
            {"indent": 4, "sort_keys": True},
        ),
        ("test_graph.dot", "graph {\n  0 -- 1;\n}\n", {}),
    ],
)


@pytest.mark.parametrize(*IO_PARAMS)
def test_save(tmp_path, name, content, kwargs):
    test_path = tmp_path / name
    assert not test_path.exists()

    result = totgraph.io.save(test_path, content, **kwargs)
    assert result == test_path
    assert test_path.exists()


@pytest.mark.parametrize(*IO_PARAMS)
def test_round_trip(tmp_path, name, content, kwargs):
    test_path = tmp_path / name
    assert not test_path.exists()

    totgraph.io.save(test_path, content, **kwargs)
    assert totgraph.io.load(test_path) == content


def test_save_accepts_str_path(tmp_path):
    result = totgraph.io.save(str(tmp_path / "rows.json"), [1, 2, 3])
    assert result == tmp_path / "rows.json"
    assert result.read_text().endswith("\n")


def test_to_csv():
    text = totgraph.io.to_csv(("ring", "note"), [("Z6", ""), ("Z3 x Z3", "a, b")])
    assert text == 'ring,note\nZ6,\nZ3 x Z3,"a, b"\n'


def test_csv_round_trip(tmp_path):
    path = totgraph.io.save(
        tmp_path / "report.csv", totgraph.io.to_csv(("ring", "order"), [("Z6", 6), ("Z9", 9)])
    )
    assert totgraph.io.load_csv(path) == [
        {"ring": "Z6", "order": "6"},
        {"ring": "Z9", "order": "9"},
    ]
