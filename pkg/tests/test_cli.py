import io
import json
import shutil

import pytest

from src.clients.fixture_client import DEFAULT_DATA_DIR
from src.main import build_parser, main
from src.models.metric import Metric

EXAMPLES = DEFAULT_DATA_DIR / "examples"


@pytest.fixture(autouse=True)
def quiet_env(monkeypatch):
    monkeypatch.setenv("METROFAN_QUIET", "1")
    monkeypatch.delenv("METROFAN_THREADS", raising=False)
    monkeypatch.delenv("METROFAN_DATA_DIR", raising=False)


def run_cli(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def example(name):
    return str(EXAMPLES / f"{name}.json")


def test_analyze_reports_every_invariant():
    code, text = run_cli("analyze", example("same_span_a"), "--facets")
    assert code == 0
    report = json.loads(text)
    assert report["metric"] == {"n": 4, "d": ["3", "3", "4", "4", "3", "3"]}
    assert report["validity"] == "STRICT"
    assert report["generic"] is False
    assert report["f_vector"] == [12, 28, 18]
    assert report["simplicial"] is False
    assert len(report["sign_vector"]["signs"]) == 3
    assert len(report["facets"]) == 18
    assert report["classes"]["tree_like"] is False
    assert report["tight_span_cells"] == 4


def test_analyze_reads_matrix_text(tmp_path):
    path = tmp_path / "triangle.txt"
    path.write_text("# three points\n0 3 4\n3 0 5\n4 5 0\n")
    code, text = run_cli("analyze", str(path))
    assert code == 0
    report = json.loads(text)
    assert report["f_vector"] == [6, 6]
    assert report["stabilizer"]["order"] == 6
    assert "facets" not in report


def test_analyze_writes_dot_files(tmp_path):
    target = tmp_path / "dot"
    code, _ = run_cli("analyze", example("same_span_b"), "--dot", str(target))
    assert code == 0
    files = sorted(target.glob("*.dot"))
    assert len(files) == 20
    assert files[0].name == "facet_001.dot"
    assert files[0].read_text().startswith("digraph facet_001")


def test_analyze_non_strict_metric_has_no_genericity(metric_file):
    code, text = run_cli("analyze", metric_file(Metric.from_values(4, [1, 2, 3, 1, 2, 1])))
    assert code == 0
    report = json.loads(text)
    assert report["validity"] == "METRIC"
    assert report["generic"] is None
    assert report["f_vector"] == [6, 12, 8]


def test_analyze_pseudometric_keeps_going(metric_file):
    split = Metric.from_values(4, [0, 1, 1, 1, 1, 0])
    code, text = run_cli("analyze", metric_file(split), "--facets")
    assert code == 0
    report = json.loads(text)
    assert report["validity"] == "PSEUDOMETRIC"
    assert report["f_vector"] is None
    assert report["simplicial"] is None
    assert report["generic"] is None
    assert "facets" not in report
    assert len(report["sign_vector"]["signs"]) == 3
    assert report["classes"]["totally_split_decomposable"] is True
    assert report["tight_span_cells"] == 2


def test_compare_pseudometrics_skips_f_vectors(metric_file):
    path = metric_file(Metric.from_values(4, [0, 1, 1, 1, 1, 0]))
    code, text = run_cli("compare", path, path)
    assert code == 0
    assert json.loads(text)["same_f_vector"] is None


def test_invalid_metric_exit_code(metric_file):
    code, text = run_cli("analyze", metric_file(Metric.from_values(3, [1, 1, 3])))
    assert code == 3
    assert text == ""


def test_negative_distance_exit_code(metric_file):
    code, _ = run_cli("analyze", metric_file(Metric.from_values(3, [-1, 1, 1])))
    assert code == 3


def test_parse_error_exit_code(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text('{"n": 4, "d": ["1", "x"]}')
    code, _ = run_cli("analyze", str(path))
    assert code == 2
    assert capsys.readouterr().err.startswith("Error:")
    assert run_cli("analyze", str(tmp_path / "missing.json"))[0] == 2


def test_arrangement_counts_chambers():
    code, text = run_cli("arrangement", "--n", "4", "--count")
    assert code == 0
    stats = json.loads(text)
    assert stats["hyperplanes"] == 3
    assert stats["lineality_dim"] == 4
    assert stats["lineality_spanned_by_elementary_splits"] is True
    assert stats["charpoly"]["coefficients"] == [1, -3, 2, 0, 0, 0, 0]
    assert stats["charpoly"]["polynomial"] == "t**6 - 3*t**5 + 2*t**4"
    assert stats["chambers"] == 6
    assert "list" not in stats


def test_arrangement_lists_hyperplanes():
    code, text = run_cli("arrangement", "--n", "5", "--list")
    assert code == 0
    stats = json.loads(text)
    assert len(stats["list"]) == 15
    assert stats["list"][0] == {"k": 2, "a": [1, 2], "b": [3, 4], "normal": [0, 1, -1, 0, -1, 1, 0, 0, 0, 0]}


def test_arrangement_limits():
    assert run_cli("arrangement", "--n", "7")[0] == 4
    assert run_cli("arrangement", "--n", "6", "--count")[0] == 4
    assert run_cli("arrangement", "--n", "3")[0] == 1


def test_compare_same_cone_different_tight_span():
    code, text = run_cli("compare", example("same_cone_a"), example("same_cone_b"))
    assert code == 0
    assert json.loads(text) == {
        "same_wasserstein_cone": True,
        "same_tight_span_type": False,
        "same_f_vector": True,
    }


def test_compare_same_tight_span_different_cone():
    code, text = run_cli("compare", example("same_span_a"), example("same_span_b"))
    assert code == 0
    assert json.loads(text) == {
        "same_wasserstein_cone": False,
        "same_tight_span_type": True,
        "same_f_vector": False,
    }


def test_compare_needs_equal_sizes():
    assert run_cli("compare", example("same_span_a"), example("same_cone_a"))[0] == 2


def test_reproduce_writes_csv_and_summary(tmp_path):
    summary = tmp_path / "summary.md"
    code, text = run_cli("reproduce", "table2", "--summary", str(summary))
    assert code == 0
    lines = text.splitlines()
    assert lines[0] == "target,row,quantity,expected,actual,status"
    assert len(lines) == 9
    assert all(line.endswith(",ok") for line in lines[1:])
    assert "ALL TABLES REPRODUCED" in summary.read_text()


def test_reproduce_mismatch_exit_code(tmp_path, monkeypatch):
    data = tmp_path / "data"
    shutil.copytree(DEFAULT_DATA_DIR, data)
    table = data / "table2.csv"
    table.write_text(table.read_text().replace("12 30 20", "12 30 21"))
    monkeypatch.setenv("METROFAN_DATA_DIR", str(data))
    code, text = run_cli("reproduce", "table2")
    assert code == 5
    assert "12 30 21,12 30 20,mismatch" in text


def test_bad_thread_setting(monkeypatch):
    monkeypatch.setenv("METROFAN_THREADS", "0")
    assert run_cli("arrangement", "--n", "4")[0] == 1


def test_parser_rejects_unknown_target():
    with pytest.raises(SystemExit):
        build_parser().parse_args(["reproduce", "table7"])


def test_analyze_stops_when_facet_graphs_disagree(monkeypatch):
    monkeypatch.setattr("src.main.facet_graph_check", lambda m, krw: False)
    code, _ = run_cli("analyze", example("same_span_a"), "--facets")
    assert code == 1
