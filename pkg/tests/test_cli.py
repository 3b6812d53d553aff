import json
from fractions import Fraction

import pytest

from coxwalk import expected_length_A_T, expected_length_B_T
from coxwalk.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_eval_json_round_trip(capsys):
    code, out, _ = run(
        capsys, "eval", "--family", "B", "--n", "3", "--gens", "reflections",
        "--measure", "length", "--t", "4", "--format", "json",
    )
    assert code == 0
    obj = json.loads(out)
    value = Fraction(int(obj["value"]["num"]), int(obj["value"]["den"]))
    assert value == expected_length_B_T(3, 4)
    assert obj["method"] == "B_T_length"
    assert obj["family"] == "B" and obj["param"] == 3 and obj["r"] is None


def test_eval_csv(capsys):
    code, out, _ = run(
        capsys, "eval", "--family", "A", "--n", "4", "--t", "2", "--format", "csv",
    )
    assert code == 0
    header, row = out.strip().split("\n")
    assert header.startswith("family,param,r,gens,measure,t,method,value")
    v = expected_length_A_T(4, 2)
    assert f"{v.numerator}/{v.denominator}" in row


def test_eval_m_alias_and_g_family(capsys):
    code, out, _ = run(
        capsys, "eval", "--family", "I2", "--m", "6", "--gens", "reflections",
        "--measure", "abslength", "--t", "2", "--format", "json",
    )
    assert code == 0
    obj = json.loads(out)
    assert Fraction(int(obj["value"]["num"]), int(obj["value"]["den"])) == Fraction(5, 3)

    code, out, _ = run(
        capsys, "eval", "--family", "G", "--n", "2", "--r", "3",
        "--measure", "abslength", "--t", "1", "--format", "json",
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["r"] == 3
    assert Fraction(int(obj["value"]["num"]), int(obj["value"]["den"])) == 1


def test_eval_engines_agree(capsys):
    args = ["--family", "D", "--n", "3", "--t", "3", "--format", "json"]
    _, closed, _ = run(capsys, "eval", *args)
    _, full, _ = run(capsys, "eval", *args, "--engine", "exact-full")
    _, pair, _ = run(capsys, "eval", *args, "--engine", "exact-pair")
    values = [json.loads(s)["value"] for s in (closed, full, pair)]
    assert values[0] == values[1] == values[2]


def test_eval_mc_fields(capsys):
    code, out, _ = run(
        capsys, "eval", "--family", "A", "--n", "5", "--t", "3",
        "--engine", "mc", "--trials", "500", "--seed", "9", "--format", "json",
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["method"] == "mc"
    assert isinstance(obj["value"], float)
    assert obj["trials"] == 500 and obj["seed"] == 9 and obj["stderr"] > 0


def test_eval_fallback_warns(capsys):
    code, out, err = run(
        capsys, "eval", "--family", "B", "--n", "2", "--gens", "simple",
        "--measure", "length", "--t", "3", "--format", "json",
    )
    assert code == 0
    assert "falling back" in err
    assert json.loads(out)["method"] == "exact-full"


def test_table_row_count_and_consistency(capsys):
    code, out, _ = run(
        capsys, "table", "--family", "A", "--n", "6", "--t-max", "10",
        "--format", "csv", "--trials", "100",
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "t,closed_form,exact,mc_mean,mc_stderr"
    assert len(lines) == 12  # header + 11 rows
    for line in lines[1:]:
        cells = line.split(",")
        assert cells[1] == cells[2]  # closed_form == exact, string equality


def test_table_json(capsys):
    code, out, _ = run(
        capsys, "table", "--family", "I2", "--m", "5", "--t-max", "3",
        "--format", "json", "--trials", "100",
    )
    assert code == 0
    obj = json.loads(out)
    assert len(obj["rows"]) == 4
    for row in obj["rows"]:
        assert row["closed_form"] == row["exact"]


def test_verify_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "dihedral")
    assert code == 0
    lines = out.strip().split("\n")
    assert all(l.startswith("[PASS]") for l in lines[:-1])
    assert lines[-1].startswith("OK")


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["eval", "--family", "Z", "--n", "3", "--t", "1"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["eval", "--family", "A", "--t", "1"])  # missing --n
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["eval", "--family", "I2", "--m", "4", "--t", "1", "--engine", "exact-pair"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "nonsense"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["eval", "--family", "G", "--n", "3", "--r", "4", "--t", "1",
              "--engine", "exact-full"])  # no element model for r >= 3
    assert exc.value.code == 2


def test_verify_failure_exits_1(capsys, monkeypatch):
    from coxwalk import verify
    from coxwalk.verify import CheckResult

    monkeypatch.setitem(
        verify.SUITES, "always-fails",
        (lambda: CheckResult("forced failure", False, "synthetic"),),
    )
    code, out, _ = run(capsys, "verify", "--suite", "always-fails")
    assert code == 1
    assert "[FAIL]" in out


def test_guard_env_var(capsys, monkeypatch):
    monkeypatch.setenv("COXWALK_GUARD_LIMIT", "10")
    code = main(["eval", "--family", "A", "--n", "6", "--t", "2",
                 "--engine", "exact-full"])
    err = capsys.readouterr().err
    assert code == 2
    assert "guard" in err
