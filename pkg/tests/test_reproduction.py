import shutil

import pytest

from src.analyzers.reproduction import TARGETS, reproduce, reproduce_table2
from src.clients.fixture_client import DEFAULT_DATA_DIR, FixtureClient
from src.models.report import MISMATCH, OK, OUT_OF_SCOPE


def test_targets():
    assert set(TARGETS) == {"table1", "table2", "table3-strict5", "generic5"}
    with pytest.raises(ValueError):
        reproduce("table9", FixtureClient())


def test_table2_is_reproduced(fixtures):
    result = reproduce("table2", fixtures)
    assert result.passed
    assert len(result.checks) == 8
    assert {c.quantity for c in result.checks} == {"f_vector", "f01_formula"}


def test_row_order_does_not_depend_on_threads(fixtures):
    single = reproduce_table2(fixtures, threads=1)
    pooled = reproduce_table2(fixtures, threads=4)
    assert [c.as_row() for c in single] == [c.as_row() for c in pooled]


def test_wrong_published_value_is_a_mismatch(tmp_path):
    shutil.copytree(DEFAULT_DATA_DIR, tmp_path / "data")
    table = tmp_path / "data" / "table2.csv"
    table.write_text(table.read_text().replace("12 24 14", "12 24 15"))
    result = reproduce("table2", FixtureClient(tmp_path / "data"))
    assert not result.passed
    [bad] = result.mismatches
    assert (bad.row, bad.quantity, bad.expected, bad.actual) == ("4", "f_vector", "12 24 15", "12 24 14")


@pytest.mark.slow
def test_table1_is_reproduced(fixtures):
    result = reproduce("table1", fixtures)
    assert result.passed
    by_cell = {(c.row, c.quantity): c for c in result.checks}
    assert by_cell[("n=5", "labeled")].actual == "882"
    assert by_cell[("n=5", "unlabeled")].actual == "12"
    assert by_cell[("n=4", "charpoly")].actual == "1 -3 2"
    assert by_cell[("n=6", "hyperplanes")].status == OK
    assert by_cell[("n=6", "labeled")].status == OUT_OF_SCOPE
    assert result.count(MISMATCH) == 0


@pytest.mark.slow
def test_generic5_is_reproduced(fixtures):
    result = reproduce("generic5", fixtures, threads=2)
    assert result.passed
    assert result.checks[-1].quantity == "orbit_size_sum"
    assert result.checks[-1].actual == "882"


@pytest.mark.slow
def test_strict5_table_is_reproduced(fixtures):
    result = reproduce("table3-strict5", fixtures, threads=4)
    assert result.passed
    assert len(result.checks) == 65 * 4
