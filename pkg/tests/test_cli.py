"""End-to-end tests of the vnum command-line interface."""

import csv
import json

import pytest

from vnumber import cli


IDEAL_TEXT = """\
# a depth-zero example
vars: x y
x^2
x y
y^2
"""


def _run(capsys, argv):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def _write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


def test_v_task(tmp_path, capsys):
    ideal = _write(tmp_path, "ideal.txt", IDEAL_TEXT)
    code, out, _ = _run(capsys, ["v", "--ideal", ideal])
    assert code == 0
    report = json.loads(out)
    assert report["schema"] == 1
    assert report["task"] == "v"
    assert report["verdict"] == "pass"
    assert report["results"]["v"] == 1
    assert report["config"]["ideal"] == ideal


def test_vfunction_with_outputs(tmp_path, capsys):
    ideal = _write(tmp_path, "ideal.txt", IDEAL_TEXT)
    out_path = tmp_path / "report.json"
    csv_path = tmp_path / "table.csv"
    code, out, _ = _run(
        capsys,
        ["vfunction", "--ideal", ideal, "--k", "3",
         "--out", str(out_path), "--csv", str(csv_path)],
    )
    assert code == 0
    assert out == ""  # report went to the file
    report = json.loads(out_path.read_text())
    rows = report["results"]["report"]["rows"]
    assert [row["v"] for row in rows] == [1, 3, 5]
    with open(csv_path, newline="") as handle:
        rows = list(csv.DictReader(handle))
    assert {row["k"] for row in rows} == {"1", "2", "3"}
    assert all({"prime", "v", "witness"} <= set(row) for row in rows)


def test_graph_and_poset_sources(tmp_path, capsys):
    graph = _write(tmp_path, "path.txt", "1 2\n2 3\n")
    code, out, _ = _run(capsys, ["v", "--graph", graph])
    assert code == 0
    assert json.loads(out)["results"]["v"] == 1

    poset = _write(tmp_path, "chain.txt", "1 < 2\n")
    code, out, _ = _run(capsys, ["v", "--poset", poset])
    assert code == 0
    assert json.loads(out)["results"]["v"] == 1


def test_source_arguments_are_exclusive(tmp_path, capsys):
    ideal = _write(tmp_path, "ideal.txt", IDEAL_TEXT)
    graph = _write(tmp_path, "path.txt", "1 2\n")
    code, _, err = _run(capsys, ["v", "--ideal", ideal, "--graph", graph])
    assert code == 2 and "exactly one" in err
    code, _, err = _run(capsys, ["v"])
    assert code == 2 and "exactly one" in err


def test_parse_errors_carry_line_numbers(tmp_path, capsys):
    bad = _write(tmp_path, "bad.txt", "vars: x y\nx^2\nz\n")
    code, _, err = _run(capsys, ["v", "--ideal", bad])
    assert code == 2
    assert "bad.txt:3:" in err and "unknown variable" in err

    loops = _write(tmp_path, "loop.txt", "1 1\n")
    code, _, err = _run(capsys, ["v", "--graph", loops])
    assert code == 2 and "loop.txt:1:" in err

    dup = _write(tmp_path, "dup.txt", "1 2\n1 2\n")
    code, _, err = _run(capsys, ["v", "--graph", dup])
    assert code == 2 and "dup.txt:2:" in err

    empty = _write(tmp_path, "empty.txt", "# nothing\n")
    code, _, err = _run(capsys, ["v", "--ideal", empty])
    assert code == 2


def test_k_guard(tmp_path, capsys):
    ideal = _write(tmp_path, "ideal.txt", IDEAL_TEXT)
    code, _, err = _run(capsys, ["vfunction", "--ideal", ideal, "--k", "99"])
    assert code == 2 and "--k" in err


def test_csv_restricted_to_v_tables(tmp_path, capsys):
    ideal = _write(tmp_path, "ideal.txt", IDEAL_TEXT)
    code, _, err = _run(
        capsys, ["ass", "--ideal", ideal, "--csv", str(tmp_path / "no.csv")]
    )
    assert code == 2 and "csv" in err.lower()


def test_polarize_check_falsifies(capsys):
    code, out, _ = _run(
        capsys, ["polarize-check", "--seed", "42", "--count", "12"]
    )
    assert code == 1
    report = json.loads(out)
    assert report["verdict"] == "falsification-event"
    assert report["results"]["failures_by_check"] == {"polarization": 1}
    failure = report["results"]["failures"][0]
    assert failure["check"] == "polarization"
    assert "ideal" in failure


def test_simon_task_and_determinism(capsys):
    argv = ["simon", "--n", "3", "--d", "2", "--mode", "monomial"]
    code, first, _ = _run(capsys, argv)
    assert code == 0
    code, second, _ = _run(capsys, argv)
    assert code == 0
    a, b = json.loads(first), json.loads(second)
    a.pop("timing_seconds"), b.pop("timing_seconds")
    assert a == b
    assert a["results"]["exhaustive"] is True
    assert a["results"]["counterexamples"] == []
