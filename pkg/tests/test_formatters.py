import json
from datetime import datetime
from fractions import Fraction

from src.formatters.csv_formatter import CsvFormatter
from src.formatters.dot_formatter import DotFormatter
from src.formatters.json_formatter import JsonFormatter
from src.formatters.markdown_formatter import MarkdownFormatter
from src.models.graph import DirectedGraph
from src.models.metric import Metric
from src.models.report import OUT_OF_SCOPE, ReproductionCheck, ReproductionResult


def _result(target, *checks):
    return ReproductionResult(target=target, checks=list(checks), seconds=0.25)


def test_check_status():
    assert ReproductionCheck.compare("t", "1", "q", 3, 3).status == "ok"
    assert ReproductionCheck.compare("t", "1", "q", "1 2", "1 3").status == "mismatch"


def test_csv_rows():
    text = CsvFormatter().format([ReproductionCheck.compare("table2", "1", "f_vector", "12 30 20", "12 30 20")])
    assert text == "target,row,quantity,expected,actual,status\ntable2,1,f_vector,12 30 20,12 30 20,ok\n"


def test_json_keeps_rationals_as_strings():
    m = Metric.from_values(3, [Fraction(1, 3), 1, 1])
    data = json.loads(JsonFormatter().format(m.to_dict()))
    assert data == {"n": 3, "d": ["1/3", "1", "1"]}


def test_dot_output():
    graph = DirectedGraph.from_edges(3, [(2, 3), (1, 3)])
    text = DotFormatter().format(graph, name="facet_007")
    assert text.splitlines() == [
        "digraph facet_007",
        "{",
        '    p1 [label="1"];',
        '    p2 [label="2"];',
        '    p3 [label="3"];',
        "    p1 -> p3;",
        "    p2 -> p3;",
        "}",
    ]


def test_markdown_all_passed():
    report = MarkdownFormatter().format([
        _result("table2", ReproductionCheck.compare("table2", "1", "f_vector", "1", "1")),
        _result("table1", ReproductionCheck("table1", "n=6", "labeled", "6677863200", "", OUT_OF_SCOPE)),
    ])
    assert report.startswith("# Table Reproduction Report")
    assert "**Targets:** table2, table1" in report
    assert "| **table1** | 0 | 0 | 1 | 0.2s |" in report
    assert "ALL TABLES REPRODUCED" in report
    assert "## Mismatches" not in report


def test_markdown_lists_mismatches():
    bad = ReproductionCheck.compare("generic5", "3", "stabilizer_order", 2, 1)
    report = MarkdownFormatter().format([_result("generic5", bad)])
    assert "MISMATCHES FOUND" in report
    assert "## Mismatches in generic5" in report
    assert "| 3 | stabilizer_order | 2 | 1 |" in report


def test_markdown_is_stable_without_a_run_date():
    results = [_result("table2", ReproductionCheck.compare("table2", "1", "f_vector", "1", "1"))]
    report = MarkdownFormatter().format(results)
    assert "Run Date" not in report
    assert report == MarkdownFormatter().format(results)


def test_markdown_prints_a_given_run_date():
    results = [_result("table2", ReproductionCheck.compare("table2", "1", "f_vector", "1", "1"))]
    report = MarkdownFormatter(run_date=datetime(2024, 6, 11, 9, 30)).format(results)
    assert "**Run Date:** June 11, 2024 at 09:30" in report
