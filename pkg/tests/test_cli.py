import json

import pytest

import hookshift.cli as cli
from hookshift import Fault, Partition
from hookshift.harness import SweepConfig, run_sweep


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gpoly_single_box(capsys):
    code, out, _ = run_cli(capsys, "gpoly", "1")
    assert code == 0
    assert out.strip() == "x"


def test_gpoly_compact_input(capsys):
    code, out, _ = run_cli(capsys, "gpoly", "21")
    assert code == 0
    assert out.strip() == "x^3-3x^2-x+3"


def test_hooks(capsys):
    code, out, _ = run_cli(capsys, "hooks", "2,2")
    assert code == 0
    assert out.splitlines() == ["3 2", "2 1", "H = 12"]


def test_corners(capsys):
    code, out, _ = run_cli(capsys, "corners", "55331")
    assert code == 0
    assert "T={2,4,5}" in out
    assert "B={1,3,5,6}" in out
    assert "5,5,3,3" in out


def test_syt(capsys):
    code, out, _ = run_cli(capsys, "syt", "4,3,2,1")
    assert code == 0
    assert out.strip() == "768"


def test_schur_sides_agree(capsys):
    code, lhs, _ = run_cli(capsys, "schur-lhs", "3")
    assert code == 0
    code, rhs, _ = run_cli(capsys, "schur-rhs", "3")
    assert code == 0
    assert json.loads(lhs) == json.loads(rhs)
    assert json.loads(lhs)[0]["partition"] == "3"


def test_check_pass(capsys):
    code, out, _ = run_cli(capsys, "check", "COR_4_4", "5,5,3,3,1")
    assert code == 0
    assert "PASS COR_4_4" in out
    assert "17" in out


def test_check_per_corner(capsys):
    code, out, _ = run_cli(capsys, "check", "CORNER_RATIO_2_2", "55331")
    assert code == 0
    assert out.count("PASS") == 3
    assert "corner=4" in out


def test_check_bad_partition(capsys):
    code, _, err = run_cli(capsys, "check", "THM_1_1", "3,5")
    assert code == 2
    assert "weakly decreasing" in err


def test_check_unknown_identity(capsys):
    code, _, err = run_cli(capsys, "check", "THM_9_9", "2,1")
    assert code == 2
    assert "unknown identity" in err


def test_bad_partition_exit_code(capsys):
    code, _, err = run_cli(capsys, "hooks", "x,y")
    assert code == 2
    assert err.startswith("error:")


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["no-such-command"])
    assert exc.value.code == 2


def test_example_walkthrough(capsys):
    code, out, _ = run_cli(capsys, "example-55331")
    assert code == 0
    assert "T={2,4,5}" in out
    assert "B={1,3,5,6}" in out
    assert "17x^2-38x-75" in out


def test_computation_output_is_reproducible(capsys):
    for argv in (["gpoly", "55331"], ["hooks", "55331"], ["corners", "55331"],
                 ["syt", "55331"], ["schur-lhs", "4"], ["check", "THM_4_2", "55331"],
                 ["example-55331"]):
        first = run_cli(capsys, *argv)
        second = run_cli(capsys, *argv)
        assert first == second


def test_sweep_json(capsys):
    code, out, _ = run_cli(capsys, "sweep", "--max-n", "3", "--max-n-schur", "2",
                           "--max-n-oracle", "2", "--jobs", "1")
    assert code == 0
    doc = json.loads(out)
    assert list(doc.keys()) == ["config", "identities", "theorem_1_2", "totals", "timing"]
    assert doc["totals"]["failed"] == 0


def test_sweep_clamps_oracle_bound(capsys):
    # a small --max-n must not trip over the default oracle bound
    code, out, _ = run_cli(capsys, "sweep", "--max-n", "3", "--max-n-schur", "2",
                           "--jobs", "1")
    assert code == 0
    assert json.loads(out)["config"]["max_n_oracles"] == 3


def test_sweep_csv(capsys):
    code, out, _ = run_cli(capsys, "sweep", "--max-n", "2", "--max-n-schur", "1",
                           "--max-n-oracle", "1", "--jobs", "1", "--format", "csv",
                           "--identities", "THM_1_1,COR_4_4")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "identity,n,checked,passed,failed"
    assert any(line.startswith("COR_4_4,2,") for line in lines)


def test_sweep_identities_flag_rejects_unknown(capsys):
    code, _, err = run_cli(capsys, "sweep", "--identities", "NOPE", "--jobs", "1")
    assert code == 2
    assert "bad --identities" in err


def test_sweep_output_file(tmp_path, capsys):
    path = tmp_path / "report.json"
    code, out, _ = run_cli(capsys, "sweep", "--max-n", "2", "--max-n-schur", "1",
                           "--max-n-oracle", "1", "--jobs", "1", "--output", str(path))
    assert code == 0
    assert out == ""
    doc = json.loads(path.read_text())
    assert doc["totals"]["failed"] == 0


def test_sweep_exit_code_on_failure(monkeypatch, capsys):
    fault = Fault(kind="hook", partition=Partition((2, 1)), row=1, col=1, delta=1)
    failing = run_sweep(SweepConfig(max_n_identities=3, max_n_theorem_1_2=1,
                                    max_n_oracles=1, parallelism=1, fault=fault))
    monkeypatch.setattr(cli, "run_sweep", lambda config: failing)
    code, out, _ = run_cli(capsys, "sweep", "--max-n", "3", "--jobs", "1")
    assert code == 1
    assert json.loads(out)["totals"]["failed"] > 0


def test_check_exit_code_on_failure(monkeypatch, capsys):
    fault = Fault(kind="g-factor", partition=Partition((2, 1)), index=1, delta=1)
    from hookshift import IdentityId, Workspace, check_identity

    failing = check_identity(IdentityId.EQ_4_6, Partition((2, 1)), Workspace(fault))
    assert any(not o.passed for o in failing)
    monkeypatch.setattr(cli, "check_identity", lambda *a, **k: failing)
    code, out, _ = run_cli(capsys, "check", "EQ_4_6", "2,1")
    assert code == 1
    assert "FAIL" in out
