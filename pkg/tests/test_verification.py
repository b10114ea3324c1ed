"""tests.test_verification.py"""
import pytest

from totgraph.catalog import generate_catalog
from totgraph.config import DEFAULT_POOL
from totgraph.errors import InvalidWitnessError
from totgraph.io import load_csv
from totgraph.models import VerificationRow
from totgraph.ring import build_ring
from totgraph.services import SUITES, suite
from totgraph.services.verification import VerifyOptions, revalidate_row
from totgraph.services.verification.conjecture import ConjectureExplorer, explore_conjecture
from totgraph.services.verification.reg import RegTheoremSuite, reg_prediction, verify_reg_theorems
from totgraph.services.verification.report import emit_report, load_report
from totgraph.services.verification.total import (
    TotalTheoremSuite,
    total_prediction,
    verify_total_theorem,
)


@pytest.fixture
def options():
    return VerifyOptions.from_settings()


@pytest.mark.parametrize(
    "name, suite_class",
    [("total", TotalTheoremSuite), ("reg", RegTheoremSuite), ("Conjecture", ConjectureExplorer)],
)
def test_suite_registry(name, suite_class):
    assert isinstance(suite(name), suite_class)
    assert set(SUITES) == {"total", "reg", "conjecture"}


def test_unknown_suite():
    assert suite("nope") is None


def test_verify_options_overrides():
    options = VerifyOptions.from_settings(solver_cap=5, workers=None)
    assert options.solver_cap == 5
    assert options.workers == 1


@pytest.mark.parametrize(
    "text, kind, expected",
    [("Z6", "total", 3), ("Z3 x Z3", "total", 4), ("Z3 x Z3", "zdiv", 3), ("Z3 x Z9", "total", 9)],
)
def test_total_prediction(text, kind, expected):
    assert total_prediction(build_ring(text), kind) == expected


@pytest.mark.parametrize(
    "text, expected",
    [("Z3 x Z3", 4), ("Z2 x Z3", 2), ("GF(4)", 1), ("Z9", 2), ("Z2 x Z4", 2), ("Z3 x GF(4)", None)],
)
def test_reg_prediction(text, expected):
    assert reg_prediction(build_ring(text)) == expected


def test_total_suite_z6(options):
    rows = TotalTheoremSuite(options).verify_ring(build_ring("Z6"))
    assert [(row.kind, row.status, row.predicted) for row in rows] == [
        ("total", "PASS", 3),
        ("zdiv", "PASS", 3),
    ]
    assert rows[0].branch == "(i)"
    assert rows[0].solver == 3
    assert rows[0].witnesses.clique == [0, 2, 4]


def test_total_suite_z3z3(options):
    total, zdiv = TotalTheoremSuite(options).verify_ring(build_ring("Z3 x Z3"))
    assert (total.status, total.predicted, total.provenance) == ("PASS", 4, "stored-z3z3")
    assert (zdiv.status, zdiv.predicted) == ("PASS", 3)
    assert total.branch == "excluded"


def test_total_suite_odd_field_is_an_exception(options):
    total = TotalTheoremSuite(options).verify_ring(build_ring("Z5"))[0]
    assert total.status == "EXCEPTION"
    assert total.branch == "exception"
    assert total.predicted == 1
    assert total.solver == 2
    assert "χ = 2" in total.note


@pytest.mark.parametrize("text", ["Z3", "Z5", "Z7", "GF(9)"])
def test_total_suite_certifies_zero_divisor_rows_of_odd_fields(options, text):
    zdiv = TotalTheoremSuite(options).verify_ring(build_ring(text))[1]
    assert zdiv.kind == "zdiv"
    assert (zdiv.status, zdiv.branch) == ("PASS", "(ii)")
    assert zdiv.predicted == zdiv.constructed_k == zdiv.omega == 1


def test_total_suite_skips_excluded_rings(options):
    assert TotalTheoremSuite(options).verify_ring(build_ring("Z3 x GF(4)")) == []


@pytest.mark.parametrize("text, predicted", [("Z3 x Z3", 4), ("Z2 x Z3", 2), ("GF(4)", 1)])
def test_reg_suite(options, text, predicted):
    (row,) = RegTheoremSuite(options).verify_ring(build_ring(text))
    assert row.kind == "reg"
    assert row.status == "PASS"
    assert row.predicted == predicted
    assert row.constructed_k == predicted


def test_reg_suite_skips_mixed_rings(options):
    assert RegTheoremSuite(options).verify_ring(build_ring("Z3 x GF(4)")) == []


@pytest.mark.parametrize(
    "text, predicted, provenance",
    [
        ("Z3 x Z3 x Z3", 9, "stored-z3cubed"),
        ("Z3 x GF(4)", 4, "solver"),
        ("Z3 x Z3", 4, "stored-z3z3"),
    ],
)
def test_conjecture_explorer(options, text, predicted, provenance):
    (row,) = ConjectureExplorer(options).verify_ring(build_ring(text))
    assert row.status == "PASS"
    assert row.predicted == predicted
    assert row.omega == row.constructed_k == predicted
    assert row.provenance == provenance


def test_conjecture_note_for_stored_coloring(options):
    (row,) = ConjectureExplorer(options).verify_ring(build_ring("Z3 x Z3 x Z3"))
    assert "stored nine-class coloring verified proper" in row.note


def test_conjecture_explorer_skips_covered_rings(options):
    assert ConjectureExplorer(options).verify_ring(build_ring("Z6")) == []


def test_total_pipeline_has_no_failures(options):
    report = verify_total_theorem(generate_catalog(DEFAULT_POOL, 27), options)
    assert report.summary.fail == 0
    assert report.summary.pass_ > 0
    assert report.summary.exception == 4  # total rows of Z3, Z5, Z7, GF(9)
    assert report.config.suite == "total"
    keys = [(row.order, row.ring) for row in report.rows]
    assert keys == sorted(keys)


def test_reg_pipeline_has_no_failures(options):
    report = verify_reg_theorems(generate_catalog(DEFAULT_POOL, 27), options)
    assert report.summary.fail == 0
    assert report.summary.pass_ == len(report.rows)


def test_explorer_pipeline():
    options = VerifyOptions.from_settings(solver_cap=0)
    report = explore_conjecture(generate_catalog(["Z3", "GF(4)"], 27), options)
    assert [row.ring for row in report.rows] == ["Z3 x Z3", "Z3 x GF(4)", "Z3 x Z3 x Z3"]
    assert report.summary.fail == 0


def test_rows_are_independent_of_worker_count():
    catalog = generate_catalog(["Z2", "Z3"], 12)
    serial = verify_total_theorem(catalog, VerifyOptions.from_settings(workers=1))
    pooled = verify_total_theorem(catalog, VerifyOptions.from_settings(workers=2))
    assert [row.dict() for row in serial.rows] == [row.dict() for row in pooled.rows]


def test_revalidate_row(options):
    report = verify_total_theorem(generate_catalog(["Z2", "Z3"], 9), options)
    for row in report.serialize()["rows"]:
        certificate = revalidate_row(row)
        assert certificate.k == row["constructed_k"]
        assert certificate.lower == row["omega"]


def test_revalidate_row_rejects_tampered_witness(options):
    (row, _) = TotalTheoremSuite(options).verify_ring(build_ring("Z6"))
    tampered = row.dict()
    tampered["witnesses"]["clique"] = [0, 1]
    with pytest.raises(InvalidWitnessError) as exc_info:
        revalidate_row(VerificationRow.parse_obj(tampered))
    assert "not adjacent" in str(exc_info.value)


def test_emit_report_json_round_trip(tmp_path, options):
    report = verify_reg_theorems(generate_catalog(["Z2", "Z3"], 9), options)
    path = emit_report(report, tmp_path / "report.json", "json")
    assert load_report(path) == report
    again = emit_report(report, tmp_path / "again.json")
    assert again.read_text() == path.read_text()


def test_emit_report_csv(tmp_path, options):
    report = verify_total_theorem(generate_catalog(["Z2", "Z3"], 9), options)
    path = emit_report(report, tmp_path / "report.csv", "CSV")
    rows = load_csv(path)
    assert len(rows) == len(report.rows)
    assert len(path.read_text().splitlines()) == len(report.rows) + 1
    assert rows[0]["ring"] == report.rows[0].ring


def test_emit_report_unknown_format(tmp_path, options):
    report = verify_reg_theorems(generate_catalog(["Z2"], 2), options)
    with pytest.raises(ValueError):
        emit_report(report, tmp_path / "report.xml", "xml")
