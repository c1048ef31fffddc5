from __future__ import annotations

import json
import subprocess
import sys

import pytest

from zdposet import analysis_schema, named_example, parse_poset
from zdposet.cli import main

jsonschema = pytest.importorskip("jsonschema")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def write_example(tmp_path, capsys):
    def write(name, param=None):
        argv = ["example", name] + ([] if param is None else [str(param)])
        code, out, _ = run(capsys, *argv)
        assert code == 0
        path = tmp_path / f"{name}.txt"
        path.write_text(out, encoding="utf-8")
        return path

    return write


def test_analyze_deg_counterexample(capsys, write_example):
    code, out, _ = run(capsys, "analyze", str(write_example("deg_counterexample")))
    assert code == 0
    doc = json.loads(out)
    jsonschema.validate(doc, analysis_schema())
    assert len(doc["primes"]) == 6
    degrees = {d["vertex"]: d["degree"] for d in doc["gamma_e"]["degrees"]}
    assert degrees["[{3}]{{3}}"] == 6 and degrees["[{1,2}]{{1,2}}"] == 7
    assert doc["omega"] == doc["gamma"]["omega"] == 6
    assert all(v["status"] != "fail" for v in doc["theorems"].values())


@pytest.mark.parametrize("name, param", [("powerset", 3), ("p0_trunc", 5), ("antichain", 2), ("bipartite_example", None)])
def test_documents_match_schema(capsys, write_example, name, param):
    code, out, _ = run(capsys, "analyze", str(write_example(name, param)))
    assert code == 0
    jsonschema.validate(json.loads(out), analysis_schema())


def test_analyze_chain(capsys, tmp_path):
    path = tmp_path / "chain.txt"
    path.write_text("elements: 0 a b\nrel: 0 < a\nrel: a < b\n")
    code, out, err = run(capsys, "analyze", str(path))
    assert code == 3
    assert "no zero-divisors" in err
    doc = json.loads(out)
    assert doc["error"] == "no zero-divisors"
    assert doc["poset"]["elements"] == ["0", "a", "b"]


def test_analyze_invalid(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("elements: 0 a\nrel: 0 < x\n")
    code, _, err = run(capsys, "analyze", str(path))
    assert code == 2 and "line 2" in err
    code, _, _ = run(capsys, "analyze", str(tmp_path / "missing.txt"))
    assert code == 2


def test_dot_output(capsys, write_example):
    path = str(write_example("p0_trunc", 3))
    code, out, _ = run(capsys, "analyze", path, "--dot", "gammaE")
    assert code == 0
    assert out.startswith('graph "gammaE" {')
    assert sum(1 for line in out.splitlines() if "[label=" in line) == 2
    assert out == (main(["analyze", path, "--dot", "gammaE"]), capsys.readouterr().out)[1]
    code, out, _ = run(capsys, "analyze", path, "--dot", "gamma")
    assert sum(1 for line in out.splitlines() if "[label=" in line) == 4


def test_pretty(capsys, write_example):
    code, out, _ = run(capsys, "analyze", str(write_example("powerset", 3)), "--pretty")
    assert code == 0 and out.strip() and not out.lstrip().startswith("{")


@pytest.mark.parametrize("name, param, size", [("antichain", 3, 4), ("powerset", 3, 8), ("deg_counterexample", None, 11)])
def test_example_round_trip(capsys, name, param, size):
    argv = ["example", name] + ([] if param is None else [str(param)])
    code, out, _ = run(capsys, *argv)
    assert code == 0
    P = parse_poset(out)
    assert len(P) == size
    expected = named_example(name, param)
    assert P == expected and P.leq_matrix() == expected.leq_matrix()


def test_example_errors(capsys):
    assert run(capsys, "example", "nope")[0] == 2
    assert run(capsys, "example", "powerset", "99")[0] == 2


def test_check(capsys):
    code, out, _ = run(capsys, "check", "--max-size", "4", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["instances"] > 0 and doc["failures"] == []
    code, out, _ = run(capsys, "check", "--max-size", "3")
    assert code == 0 and "all checks passed" in out


def test_check_cap(capsys):
    code, _, err = run(capsys, "check", "--max-size", "8")
    assert code == 2 and "max size" in err


def test_check_reports_failures(capsys, monkeypatch):
    from zdposet import theorems

    monkeypatch.setitem(theorems._CHECKS, "prop_4_8", lambda ctx: theorems._fail("x"))
    code, out, _ = run(capsys, "check", "--max-size", "3")
    assert code == 1 and "FAIL prop_4_8" in out


def test_check_workers_identical(capsys):
    outs = []
    for w in ("1", "4"):
        code, out, _ = run(capsys, "check", "--max-size", "5", "--workers", w, "--json")
        assert code == 0
        outs.append(out)
    assert outs[0] == outs[1]


def test_random(capsys):
    argv = ["random", "--size", "8", "--density", "0.4", "--seed", "3"]
    first = run(capsys, *argv)
    assert first[0] == 0 and first == run(capsys, *argv)
    assert len(parse_poset(first[1])) == 8
    code, out, _ = run(capsys, "random", "--size", "5", "--density", "0", "--seed", "1")
    assert code == 0 and out.count("rel:") == 4
    assert run(capsys, "random", "--size", "0", "--density", "0.5", "--seed", "1")[0] == 2


def test_module_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "zdposet", "example", "antichain", "2"],
        capture_output=True, text=True, check=True,
    )
    assert parse_poset(proc.stdout) == named_example("antichain", 2)
