import csv
import io
import json
import subprocess
import sys
from fractions import Fraction

import pytest

from madhava.cli import argv_from_parameters, run


def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def as_json(*argv):
    code, out, err = invoke(*argv)
    assert code == 0, err
    return json.loads(out)


def test_pi_example():
    doc = as_json("pi", "--terms", "1000", "--digits", "10")
    assert doc["command"] == "pi"
    row = doc["rows"][0]
    assert row["error_bound"] == {"value": "4/2001", "repr": "rational"}
    assert row["pi_estimate"]["repr"] == "decimal:10"
    assert row["pi_estimate"]["value"] == "3.1405926538"
    assert doc["metadata"]["within_bound"] is True


def test_sine_table_example():
    code, out, _ = invoke("sine-table", "--step", "1/48", "--count", "24", "--digits", "6", "--format", "csv")
    assert code == 0
    assert "\r" not in out and out.endswith("\n")
    rows = list(csv.reader(io.StringIO(out)))
    header, body = rows[0], rows[1:]
    assert len(body) == 24
    assert "value:decimal:6" in header
    deg = header.index("degrees:rational")
    assert body[0][deg] == "15/4" and body[-1][deg] == "90"
    assert '"15/4"' in out  # fractions are quoted


def test_sqrt_example():
    doc = as_json("sqrt", "--n", "95", "--seed", "9", "--method", "bakshali", "--iters", "2")
    rows = doc["rows"]
    assert [r["method"] for r in rows] == ["bakshali", "bakshali"]
    assert rows[0]["value"]["value"] == "88/9"
    assert Fraction(rows[1]["value"]["value"]) == Fraction(15439, 1584)


def test_sqrt_compare_reports_winner():
    doc = as_json("sqrt", "--n", "95", "--seed", "9", "--method", "compare")
    assert doc["metadata"]["closer"] == "tie"


@pytest.mark.parametrize(
    "argv",
    [
        ["nonsense"],
        [],
        ["pi"],
        ["pi", "--terms", "ten"],
        ["sine-table", "--step", "1/0", "--count", "3"],
        ["pi", "--terms", "5", "--format", "xml"],
    ],
)
def test_usage_errors(argv, capsys):
    code, out, _ = invoke(*argv)
    assert code == 2 and out == ""


@pytest.mark.parametrize(
    "argv, needle",
    [
        (["pi", "--terms", "0"], "at least one term"),
        (["arctan", "--t", "3/2", "--terms", "4"], "outside derived domain"),
        (["sine-table", "--step", "1/48", "--count", "30"], "past pi/2"),
        (["reciprocal", "--x", "2", "--d", "3", "--terms", "4"], "divergent"),
        (["sqrt", "--n", "5", "--seed", "3", "--method", "bakshali"], "m**2 <= n"),
        (["central-diff", "--plus", "1", "--minus", "0", "--window", "0"], "window"),
        (["quadrant", "--n", "10", "--index", "11"], "outside 1..10"),
    ],
)
def test_domain_errors(argv, needle):
    code, out, err = invoke(*argv)
    assert code == 3 and out == ""
    assert needle in err and err.count("\n") == 1


ALL_COMMANDS = [
    ["pi", "--terms", "50", "--digits", "8", "--show-fraction"],
    ["pi", "--terms", "50", "--method", "fixed"],
    ["arctan", "--t", "1/2", "--terms", "6"],
    ["powersum", "--n", "5", "--k", "3"],
    ["abel-check", "--n", "5", "--k", "3"],
    ["jk-deviation", "--n", "10", "--k", "2", "--show-fraction"],
    ["quadrant", "--n", "8", "--digits", "10"],
    ["quadrant", "--n", "100", "--index", "1"],
    ["sine-table", "--step", "1/80", "--count", "40"],
    ["sine-table", "--step", "1/48", "--count", "24", "--kind", "cosine"],
    ["central-diff", "--plus", "0.6", "--minus", "0.5", "--window", "0.122", "--digits", "2"],
    ["central-diff", "--phi", "0.5", "--h", "0.001", "--radians"],
    ["sqrt", "--n", "95", "--seed", "9"],
    ["reciprocal", "--x", "4", "--d", "1", "--terms", "3"],
    ["interpolate", "--order", "3", "--theta", "0.5236", "--delta", "0.01", "--radians"],
    ["expand", "--kind", "sine", "--order", "5"],
    ["verify", "--suite", "interpolation"],
]


@pytest.mark.parametrize("argv", ALL_COMMANDS, ids=lambda a: "-".join(a[:2]))
def test_round_trip_through_parameters(argv):
    code, first, _ = invoke(*argv)
    assert code == 0
    doc = json.loads(first)
    again = argv_from_parameters(doc["command"], doc["parameters"])
    code, second, _ = invoke(*again)
    assert code == 0 and second == first


@pytest.mark.parametrize("argv", ALL_COMMANDS, ids=lambda a: "-".join(a[:2]))
def test_csv_and_json_agree(argv):
    doc = as_json(*argv)
    _, out, _ = invoke(*argv, "--format", "csv")
    table = list(csv.reader(io.StringIO(out)))
    header, body = table[0], table[1:]
    assert len(body) == len(doc["rows"])
    for jrow, crow in zip(doc["rows"], body):
        for name, cell in zip(header, crow):
            key, _, tag = name.partition(":")
            value = jrow[key]
            if isinstance(value, dict):
                assert (value["value"], value["repr"]) == (cell, tag)
            else:
                assert str(value).lower() == cell.lower()


def test_every_numeric_cell_is_tagged():
    for argv in ALL_COMMANDS:
        doc = as_json(*argv)
        for row in doc["rows"]:
            for value in row.values():
                if isinstance(value, dict):
                    assert value["repr"] == "rational" or value["repr"].startswith("decimal:")
                else:
                    assert isinstance(value, (str, bool))


def test_byte_determinism():
    for argv in ALL_COMMANDS[:6]:
        assert invoke(*argv)[1] == invoke(*argv)[1]


def test_central_diff_two_digit_renderings():
    row = as_json("central-diff", "--plus", "0.6", "--minus", "0.5", "--window", "0.122", "--digits", "2")["rows"][0]
    assert row["estimate"]["value"] == "0.81"
    assert row["estimate_nearest"]["value"] == "0.82"


def test_verify_all():
    doc = as_json("verify")
    assert doc["metadata"]["all_passed"] is True
    assert {r["suite"] for r in doc["rows"]} == {"appendix", "expansions", "pi", "tables", "sqrt", "interpolation"}


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "madhava", "powersum", "--n", "5", "--k", "3", "--format", "csv"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert proc.stdout.splitlines()[1].split(",")[2] == "225"
