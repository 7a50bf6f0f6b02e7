import json

import pytest

from goldenk3.cli import main


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:
        code = exc.code
    out = capsys.readouterr()
    return code, out.out, out.err


def test_scan_table(capsys):
    code, out, _ = run(capsys, "scan", "--q-min", "-3", "--q-max", "3")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 7  # header + 6 rows (q = 0 excluded)
    assert sum("pass" in ln for ln in lines) == 2


def test_scan_empty_range(capsys):
    code, out, _ = run(capsys, "scan", "--q-min", "0", "--q-max", "0")
    assert code == 0


def test_scan_json_envelope(capsys):
    code, out, _ = run(capsys, "scan", "--q-min", "2", "--q-max", "2", "--format", "json")
    assert code == 0
    env = json.loads(out)
    assert env["schema_version"] == "1"
    assert env["command"] == "scan"
    assert env["inputs"] == {"q_min": 2, "q_max": 2}
    row = env["result"]["rows"][0]
    assert row["disc_factors"] == [2, 10]
    assert row["verdict"] == "pass"
    # round trip: re-serializing the parsed envelope reproduces the bytes
    assert json.dumps(env, sort_keys=True, indent=2) == out.strip()


def test_scan_table_and_json_agree(capsys):
    _, table_out, _ = run(capsys, "scan", "--q-min", "-3", "--q-max", "3")
    _, json_out, _ = run(capsys, "scan", "--q-min", "-3", "--q-max", "3", "--format", "json")
    rows = json.loads(json_out)["result"]["rows"]
    table_rows = table_out.strip().splitlines()[1:]
    assert len(rows) == len(table_rows)
    for row, line in zip(rows, table_rows):
        assert line.split()[0] == str(row["q"])
        assert line.split()[-1] == row["verdict"]


def test_certify_pass_exit_zero(capsys):
    code, out, _ = run(capsys, "certify", "--q", "2")
    assert code == 0
    assert "verdict: PASS" in out


def test_certify_fail_exit_two(capsys):
    code, out, _ = run(capsys, "certify", "--q", "3")
    assert code == 2
    assert "verdict: FAIL" in out


def test_certify_json(capsys):
    code, out, _ = run(capsys, "certify", "--q", "2", "--power", "2", "--format", "json")
    assert code == 0
    env = json.loads(out)
    payload = env["result"]
    assert payload["verdict"] == "PASS"
    assert payload["derived"]["charpoly"] == [18, 1]
    assert payload["derived"]["entropy"] == 2.88727095036
    assert payload["power"]["lefschetz"] == 344


def test_certify_explicit_triple(capsys):
    code, out, _ = run(capsys, "certify", "--gram", "4,2,-4",
                       "--map", "5,8,8,13", "--eps", "-1", "--format", "json")
    assert code == 0
    assert json.loads(out)["result"]["verdict"] == "PASS"


def test_certify_usage_errors(capsys):
    code, _, _ = run(capsys, "certify")
    assert code == 1
    code, _, _ = run(capsys, "certify", "--q", "2", "--gram", "4,2,-4")
    assert code == 1
    code, _, _ = run(capsys, "certify", "--q", "0")
    assert code == 1
    code, _, _ = run(capsys, "certify", "--gram", "4,2", "--map", "5,8,8,13", "--eps", "-1")
    assert code == 1


def test_calc_charpoly(capsys):
    code, out, _ = run(capsys, "calc", "charpoly", "--n", "3")
    assert code == 0
    assert out.strip() == "t^2 - 18t + 1"
    code, out, _ = run(capsys, "calc", "charpoly", "--n", "1", "--format", "json")
    env = json.loads(out)
    assert env["result"]["polynomial"] == "t^2 - 3t + 1"


def test_calc_lefschetz(capsys):
    code, out, _ = run(capsys, "calc", "lefschetz", "--q", "2")
    assert code == 0
    assert out.strip() == "0"
    code, out, _ = run(capsys, "calc", "lefschetz", "--q", "2", "--k", "2")
    assert out.strip() == "344"


def test_calc_holo(capsys):
    code, out, _ = run(capsys, "calc", "holo", "--case", "k3", "--alpha", "-1")
    assert code == 0
    assert out.strip() == "0"
    code, out, _ = run(capsys, "calc", "holo", "--case", "rational")
    assert out.strip() == "1"
    code, out, _ = run(capsys, "calc", "holo", "--case", "torus",
                       "--alpha", "1", "--beta", "-1")
    assert out.strip() == "0"
    code, _, _ = run(capsys, "calc", "holo", "--case", "k3", "--alpha", "3")
    assert code == 1


def test_calc_snf(capsys):
    code, out, _ = run(capsys, "calc", "snf", "--gram", "4,2,-4")
    assert code == 0
    assert out.strip() == "2,10"
    code, _, _ = run(capsys, "calc", "snf", "--gram", "2,2,2")
    assert code == 1


def test_calc_entropy(capsys):
    code, out, _ = run(capsys, "calc", "entropy", "--q", "2")
    assert code == 0
    assert out.strip() == "2.88727095036"


def test_usage_error_exit_one(capsys):
    code, _, err = run(capsys, "scan", "--q-min", "x", "--q-max", "3")
    assert code == 1
    code, _, _ = run(capsys, "nonsense")
    assert code == 1
