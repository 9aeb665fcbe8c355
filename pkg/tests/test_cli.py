import csv
import io
import json

import pytest

from skeinlab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_invariants_report(capsys):
    code, out, _ = run(capsys, "invariants", "B2: 1^3")
    assert code == 0
    data = json.loads(out)
    assert data["w"] == 3 and data["mu"] == 1
    assert all(data["checks"].values())


def test_parse_error_exit_code(capsys):
    code, _, err = run(capsys, "invariants", "B2: 3")
    assert code == 2 and "parse error" in err


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "torus", "--json")
    data = json.loads(out)
    assert code == 0 and data["ok"] and data["checked"] == 25


def test_verify_unknown_suite(capsys):
    code, _, _ = run(capsys, "verify", "no-such-suite")
    assert code == 2


def test_survey_csv_is_deterministic(capsys):
    code, first, err = run(capsys, "survey", "--max-len", "3")
    assert code == 0 and json.loads(err.strip().splitlines()[-1])["violations"] == 0
    rows = list(csv.DictReader(io.StringIO(first)))
    assert list(rows[0]) == ["word", "w", "mu", "V_hash", "P_hash", "bucket"]
    assert run(capsys, "survey", "--max-len", "3")[1] == first


@pytest.mark.parametrize("length", ["0", "11"])
def test_survey_length_bounds(capsys, length):
    assert run(capsys, "survey", "--max-len", length)[0] == 2


def test_torus_table(capsys):
    code, out, _ = run(capsys, "torus-table", "--min", "-3", "--max", "3")
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 8
    assert all(line.endswith("True") for line in lines[1:])


def test_oracle(capsys):
    code, out, _ = run(capsys, "oracle", "1^3")
    assert code == 0
    assert "jones_kauffman" in json.loads(out)


def test_conway(capsys):
    code, out, _ = run(capsys, "conway", "4")
    assert code == 0 and json.loads(out)["terms"] == [[1, "2"], [3, "1"]]


def test_omega(capsys):
    code, out, _ = run(capsys, "omega", "6", "--d", "1", "--pairs", "1:2,2:1")
    data = json.loads(out)
    assert code == 0 and data["unit_equal"] is True


def test_omega_bad_parameters(capsys):
    assert run(capsys, "omega", "4", "--d", "1")[0] == 2
