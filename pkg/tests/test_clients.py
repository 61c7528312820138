from fractions import Fraction

import pytest

from src.analyzers.metrics import is_strict
from src.clients.fixture_client import FixtureClient
from src.clients.metric_reader import MetricReader
from src.errors import MetricParseError


@pytest.fixture
def reader():
    return MetricReader()


def test_json_value_row(reader, tmp_path):
    path = tmp_path / "m.json"
    path.write_text('{"n": 3, "d": ["1/2", "1", 1]}')
    m = reader.read(path)
    assert m.n == 3
    assert m[1, 2] == Fraction(1, 2)


def test_json_matrix(reader):
    m = reader.parse_json('{"matrix": [[0, 2, 3], [2, 0, "5/2"], [3, "5/2", 0]]}')
    assert m[2, 3] == Fraction(5, 2)


def test_csv_matrix_with_comments(reader):
    text = "# distances\n0,1,2\n1,0,1  # middle\n2,1,0\n"
    m = reader.parse_table(text)
    assert m.values == (1, 2, 1)


def test_single_line_of_values(reader):
    m = reader.parse_table("8 7 5 5 7 8\n")
    assert m.n == 4
    assert m[3, 4] == 8


@pytest.mark.parametrize("text", ["", "# nothing\n", "0 1\n1 0 2\n", "1 2\n"])
def test_malformed_tables(reader, text):
    with pytest.raises(MetricParseError):
        reader.parse_table(text)


@pytest.mark.parametrize("text", ["{", "[1, 2]", '{"n": "4", "d": []}', '{"n": 2, "d": [0.5]}'])
def test_malformed_json(reader, text):
    with pytest.raises(MetricParseError):
        reader.parse_json(text)


def test_missing_file(reader, tmp_path):
    with pytest.raises(MetricParseError):
        reader.read(tmp_path / "absent.txt")


def test_fixture_tables(fixtures):
    assert [row.n for row in fixtures.chamber_counts()] == [3, 4, 5, 6]
    assert len(fixtures.strict4()) == 4
    assert len(fixtures.generic5()) == 12
    assert len(fixtures.strict5()) == 65
    assert sum(120 // s.stabilizer_order for s in fixtures.generic5()) == 882
    assert all(is_strict(s.metric) for s in fixtures.strict5())


def test_fixture_examples(fixtures):
    assert fixtures.example_names() == ["same_cone_a", "same_cone_b", "same_span_a", "same_span_b"]
    assert fixtures.example("same_cone_b")[1, 2] == 10083
    with pytest.raises(MetricParseError):
        fixtures.example("nope")


def test_missing_fixture_directory(tmp_path):
    with pytest.raises(MetricParseError):
        FixtureClient(tmp_path).strict4()
