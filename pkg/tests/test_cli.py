from __future__ import annotations

import json
import subprocess
import sys
from pathlib import Path

import jsonschema
import pytest

from moorezeta import bernoulli
from moorezeta.cli import cmd_values, load_schema, main, render_factorization

GOLDEN = Path(__file__).parent / "golden"
SCHEMA = load_schema()


def run(argv: list[str]) -> tuple[int, str]:
    chunks: list[str] = []
    code = main(argv, out=chunks.append)
    return code, "\n".join(chunks)


def run_json(argv: list[str]) -> tuple[int, dict]:
    code, text = run(argv + ["--format", "json"])
    doc = json.loads(text)
    jsonschema.validate(doc, SCHEMA)
    return code, doc


@pytest.mark.parametrize("p", [3, 5, 7])
def test_values_golden(p):
    code, text = run(["values", "--p", str(p), "--n-max", "8"])
    assert code == 0
    column = [line.split("  ")[0].rstrip() for line in text.splitlines() if line.startswith("L(")]
    assert column == (GOLDEN / f"values_p{p}.txt").read_text().splitlines()


def test_factorizations_golden():
    for line in (GOLDEN / "factorizations.txt").read_text().splitlines():
        p, n, expected = line.split()
        doc = cmd_values(int(p), int(n), factor_bound=3 * 10**6)
        row = doc["rows"][-1]
        assert row["factorization"] == expected
        assert row["cofactor"] is None


def test_unfactored_cofactor_is_flagged():
    text, cof = render_factorization(1409884, 30)
    assert text == "2^2·7·C[50353]"
    assert cof == 50353
    # below bound^2 a leftover is certainly prime
    assert render_factorization(1409884, 100)[0] == "2^2·7·43·1171"
    assert render_factorization(-12, 10) == ("-2^2·3", None)
    assert render_factorization(0, 10) == ("0", None)
    assert render_factorization(1, 10) == ("1", None)


@pytest.mark.parametrize(
    "argv",
    [
        ["values", "--p", "5", "--n-max", "4"],
        ["verify", "--p", "3", "--n-max", "12"],
        ["euler", "--p", "3", "--s", "2", "--prime-bound", "10000"],
        ["functional", "--p", "3", "--n", "2", "--prime-bound", "100000"],
        ["probability", "--p", "3", "--prime-bound", "100000", "--samples", "20000"],
        ["congruence", "--p", "3", "--j-max", "2"],
        ["carlitz", "--p", "5", "--n-max", "8"],
        ["homotopy", "--p", "3", "--n", "4"],
    ],
)
def test_every_command_validates(argv):
    code, doc = run_json(argv)
    assert code == 0
    assert doc["status"] == "pass"
    assert doc["command"] == argv[0]


def test_values_json_exact_strings():
    _, doc = run_json(["values", "--p", "7", "--n-max", "6"])
    values = [r["value"] for r in doc["rows"]]
    assert values[1] == "17624384"
    assert values[5] == "1448428968939581787932808098954336691322688/7"
    assert all(isinstance(v, str) for v in values)


def test_homotopy_and_congruence_values():
    _, doc = run_json(["homotopy", "--p", "3", "--n", "4"])
    assert doc["rows"][0]["order"] == 3
    _, doc = run_json(["congruence", "--p", "3", "--j-max", "2"])
    assert doc["rows"][0]["a"] == "-1/3"
    assert doc["rows"][0]["nu_p_a_diff"] == 0


def test_probability_rendering():
    _, doc = run_json(["probability", "--p", "3", "--prime-bound", "100000"])
    closed = doc["rows"][0]
    assert closed["expression"] == "59049/(64π^6)"
    assert abs(closed["value"] - 0.9597) < 1e-4


def test_usage_errors_exit_two(capsys):
    assert main(["values", "--p", "4"]) == 2
    assert main(["euler", "--p", "3", "--s", "1"]) == 2
    assert main(["functional", "--p", "3", "--n", "3"]) == 2
    with pytest.raises(SystemExit) as exc:
        main(["values"])
    assert exc.value.code == 2


def test_mismatch_exits_one(monkeypatch):
    from moorezeta import lvalues

    monkeypatch.setattr(lvalues, "homotopy_order", lambda p, n: 1)
    code, doc = run_json(["verify", "--p", "3", "--n-max", "4"])
    assert code == 1
    assert doc["status"] == "fail"


def test_deterministic_output(monkeypatch):
    monkeypatch.setenv("SOURCE_DATE_EPOCH", "0")
    argv = ["probability", "--p", "3", "--prime-bound", "10000", "--samples", "70000", "--seed", "3"]
    _, a = run(argv + ["--format", "json"])
    _, b = run(argv + ["--format", "json", "--threads", "3"])
    assert a == b
    assert json.loads(a)["timestamp"] == "1970-01-01T00:00:00+00:00"


def test_json_round_trip():
    _, text = run(["carlitz", "--p", "3", "--n-max", "4", "--format", "json"])
    doc = json.loads(text)
    assert json.loads(json.dumps(doc)) == doc


def test_cache_round_trip(tmp_path):
    cache = tmp_path / "b.json"
    bernoulli.clear_cache()
    _, first = run_json(["values", "--p", "5", "--n-max", "6", "--cache-path", str(cache)])
    saved = json.loads(cache.read_text())
    assert saved["format"] == "moorezeta.bernoulli-cache.v1"
    assert "5:4:6" in saved["entries"]
    bernoulli.clear_cache()
    _, second = run_json(["values", "--p", "5", "--n-max", "6", "--cache-path", str(cache)])
    assert first["rows"] == second["rows"]
    cache.unlink()
    bernoulli.clear_cache()
    _, third = run_json(["values", "--p", "5", "--n-max", "6"])
    assert third["rows"] == first["rows"]


def test_cache_rejects_foreign_file(tmp_path):
    bad = tmp_path / "x.json"
    bad.write_text(json.dumps({"format": "other", "entries": {}}))
    with pytest.raises(ValueError):
        main(["values", "--p", "3", "--cache-path", str(bad)])


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "moorezeta", "homotopy", "--p", "5", "--n", "7", "--format", "json"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["rows"][0]["order"] == 5
