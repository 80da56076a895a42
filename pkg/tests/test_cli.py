"""Batch CLI: exit codes, formats, determinism."""

import csv
import io
import json

import pytest

from gentile.cli import main, parse_n_values
from gentile.errors import OutOfRange


def test_parse_n_values():
    assert parse_n_values("5") == [5]
    assert parse_n_values("2..6") == [2, 3, 4, 5, 6]
    with pytest.raises(OutOfRange):
        parse_n_values("0")
    with pytest.raises(OutOfRange):
        parse_n_values("5..2")


def test_audit_exit_zero(capsys):
    assert main(["audit", "--n", "1..3"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["crosscheck"] == "PASS"
    verdicts = {r["identity_id"]: r["verdict"] for r in payload["matrix"]}
    # documented printed-relation failures are data, not exit conditions
    assert verdicts["appB_adagb2_adag"] == "FAIL"


def test_audit_bad_range_exit_one(capsys):
    assert main(["audit", "--n", "0"]) == 1
    assert "error" in capsys.readouterr().err


def test_spectrum_json(capsys):
    assert main(["spectrum", "--n", "1"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload[0]["levels"] == [
        {"energy": -0.5, "multiplicity": 1},
        {"energy": 0.5, "multiplicity": 1}]


def test_spectrum_csv(capsys):
    assert main(["spectrum", "--n", "3", "--format", "csv"]) == 0
    rows = list(csv.DictReader(io.StringIO(capsys.readouterr().out)))
    assert len(rows) == 4
    energies = [round(float(r["energy"]), 9) for r in rows]
    assert energies == [0.0, 1.0, 1.0, 0.0]
    assert [r["multiplicity"] for r in rows] == ["2", "2", "2", "2"]


def test_spectrum_sweep(capsys):
    assert main(["spectrum", "--n", "2..6"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert [r["n"] for r in payload] == [2, 3, 4, 5, 6]


def test_coherent(capsys):
    assert main(["coherent", "--n", "1", "--lambda", "alternating"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload[0]["delta"] == [[1.0, 0.0], [1.0, 0.0]]
    assert payload[0]["eigenstate_residual"] <= 1e-12


def test_su2_json(capsys):
    assert main(["su2", "--n", "1..4", "--A", "adagb"]) == 0
    payload = json.loads(capsys.readouterr().out)
    for record in payload:
        assert set(record["residuals"]) == {"comm87", "comm88p", "comm88m",
                                            "casimir", "e010"}
        assert max(record["residuals"].values()) <= 1e-9


def test_su2_degenerate_diagnostic(capsys):
    # documented node collision is a diagnostic, not a failure
    assert main(["su2", "--n", "2", "--A", "adaga"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload[0]["degenerate_nodes"]["pair"] == [1, 2]


def test_eval(capsys):
    assert main(["eval", "[b,adag]_n", "--n", "5"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["normal_form"] == "(1)*1"
    assert payload["per_n"][0]["matrix_residual"] <= 1e-12


def test_eval_parse_error(capsys):
    assert main(["eval", "[b,", "--n", "2"]) == 1
    assert "error" in capsys.readouterr().err


def test_eval_free_symbol_exit_one(capsys):
    # u is outside the quotient alphabet: configuration error, not crash
    assert main(["eval", "u v", "--n", "2"]) == 1


def test_arcsin_audit(capsys):
    assert main(["arcsin-audit", "--n", "3"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload[0]["collision_flag"] is True
    assert [0, 2] in payload[0]["collisions"]


def test_unknown_subcommand_exit_one(capsys):
    assert main(["no-such-command"]) == 1


def test_output_file_and_determinism(tmp_path):
    out_a = tmp_path / "a.json"
    out_b = tmp_path / "b.json"
    for out in (out_a, out_b):
        assert main(["audit", "--n", "1..3", "--seed", "7",
                     "--out", str(out)]) == 0
    assert out_a.read_bytes() == out_b.read_bytes()


def test_table_format(capsys):
    assert main(["audit", "--n", "1..2", "--format", "table"]) == 0
    out = capsys.readouterr().out
    assert "# free suite" in out and "verdict" in out
