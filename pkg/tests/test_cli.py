"""CLI dispatch, output formats, determinism, and exit codes."""

import json

import pytest

from rpl import cli
from rpl.verify import CheckResult


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_points_homma_json_payload(capsys):
    code, out, err = run_cli(
        capsys, "points-homma", "--q", "3", "--ell", "3", "--format", "json"
    )
    assert code == 0
    assert json.loads(out) == {
        "schema": 1,
        "affine": 2,
        "infinity": 4,
        "total": 6,
        "degree": 4,
        "ratio": "3/2",
    }


def test_points_homma_integral_ratio(capsys):
    code, out, _ = run_cli(
        capsys, "points-homma", "--q", "4", "--ell", "2", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["total"] == 9
    assert payload["degree"] == 3
    assert payload["ratio"] == "3"


def test_points_homma_text(capsys):
    code, out, _ = run_cli(capsys, "points-homma", "--q", "3", "--ell", "3")
    assert code == 0
    assert out == "affine 2\ninfinity 4\ntotal 6\ndegree 4\nratio 3/2\n"


def test_points_homma_rejects_small_q(capsys):
    code, out, err = run_cli(capsys, "points-homma", "--q", "2", "--ell", "3")
    assert code == 2
    assert out == ""
    assert "q > 2" in err


def test_points_homma_rejects_non_prime_power(capsys):
    code, _, err = run_cli(capsys, "points-homma", "--q", "6", "--ell", "2")
    assert code == 2
    assert "prime power" in err


def test_gs_json_payload(capsys):
    code, out, _ = run_cli(capsys, "gs", "--q", "2", "--m", "4", "--format", "json")
    assert code == 0
    assert json.loads(out) == {
        "schema": 1,
        "q": 2,
        "m": 4,
        "genus": 9,
        "split": 16,
        "conductor": 12,
        "gap_count": 9,
        "gamma_first": 8,
        "gamma_last": 19,
        "smallest_ok": True,
        "largest_ok": True,
    }


def test_gs_level_one_omits_bound_verdicts(capsys):
    code, out, _ = run_cli(capsys, "gs", "--q", "2", "--m", "1", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["genus"] == 0
    assert payload["split"] == 2
    assert payload["smallest_ok"] is None
    assert payload["largest_ok"] is None
    code, text_out, _ = run_cli(capsys, "gs", "--q", "2", "--m", "1")
    assert "smallest_ok" not in text_out


def test_gs_frozen_3_2(capsys):
    code, out, _ = run_cli(capsys, "gs", "--q", "3", "--m", "2", "--format", "json")
    payload = json.loads(out)
    assert payload["genus"] == 4
    assert payload["split"] == 18
    assert payload["conductor"] == 6


def test_semigroup_csv(capsys):
    code, out, _ = run_cli(capsys, "semigroup", "--q", "2", "--m", "4", "--format", "csv")
    assert code == 0
    assert out == (
        "q,m,conductor,gap_count,smallest_positive,generators\n"
        "2,4,12,9,8,8;10;12;13;14;15;17;19\n"
    )
    assert "\r" not in out


def test_bounds_single_q(capsys):
    code, out, _ = run_cli(capsys, "bounds", "--q", "9", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["upper"] == 8
    assert payload["best_lower"] == "3/2"
    names = [rec["name"] for rec in payload["records"]]
    assert names[0] == "nondegenerate-limit"
    assert "square-tower" in names


def test_bounds_q2_empty_lower(capsys):
    code, out, _ = run_cli(capsys, "bounds", "--q", "2", "--format", "json")
    payload = json.loads(out)
    assert payload["upper"] == 1
    assert payload["best_lower"] is None


def test_bounds_table_csv(capsys):
    code, out, _ = run_cli(capsys, "bounds", "--table", "32", "--format", "csv")
    assert code == 0
    lines = out.split("\n")
    assert lines[0] == "q,upper,best_lower,records"
    assert lines[1] == "2,1,,nondegenerate-limit=1"
    rows = [line for line in lines[1:] if line]
    assert len(rows) == 18
    assert [row.split(",")[0] for row in rows] == [
        "2", "3", "4", "5", "7", "8", "9", "11", "13", "16",
        "17", "19", "23", "25", "27", "29", "31", "32",
    ]


def test_bounds_table_rejects_tiny_limit(capsys):
    code, _, err = run_cli(capsys, "bounds", "--table", "1")
    assert code == 2
    assert "at least 2" in err


def test_bounds_requires_q_or_table(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["bounds"])
    assert exc.value.code == 2


def test_output_is_deterministic(capsys):
    _, first, _ = run_cli(capsys, "bounds", "--table", "16", "--format", "json")
    _, second, _ = run_cli(capsys, "bounds", "--table", "16", "--format", "json")
    assert first == second


def test_out_flag_writes_file(tmp_path, capsys):
    target = tmp_path / "points.json"
    code, out, _ = run_cli(
        capsys,
        "points-homma", "--q", "3", "--ell", "3", "--format", "json",
        "--out", str(target),
    )
    assert code == 0
    assert out == ""
    _, direct, _ = run_cli(capsys, "points-homma", "--q", "3", "--ell", "3", "--format", "json")
    assert target.read_text(encoding="utf-8") == direct


def test_verify_scope_output(capsys):
    code, out, _ = run_cli(capsys, "verify", "homma")
    assert code == 0
    lines = out.strip().split("\n")
    assert all(" PASS" in line for line in lines[:-1])
    passed, total = lines[-1].split(" ")[0].split("/")
    assert passed == total
    assert int(total) == len(lines) - 1


def test_verify_bounds_names_quartic_check(capsys):
    code, out, _ = run_cli(capsys, "verify", "bounds")
    assert code == 0
    assert "exceptional_quartic=14 PASS" in out


def test_verify_json_schema(capsys):
    code, out, _ = run_cli(capsys, "verify", "homma", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["schema"] == 1
    assert payload["scope"] == "homma"
    assert payload["passed"] == payload["total"] == len(payload["checks"])
    assert all(check["ok"] for check in payload["checks"])


def test_verify_rejects_unknown_scope(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["verify", "everything"])
    assert exc.value.code == 2


def test_verify_failure_sets_exit_code(monkeypatch, capsys):
    import rpl.verify

    def fake(scope, n_max):
        return [CheckResult("gf", "stub_check", False, "synthetic failure")]

    monkeypatch.setattr(rpl.verify, "run_verify", fake)
    code, out, _ = run_cli(capsys, "verify", "gf")
    assert code == 1
    assert "stub_check FAIL (synthetic failure)" in out
    assert "0/1 checks passed" in out


def test_verify_small_scan_window_fails_convergence(capsys):
    # n_max = 10 is too shallow for q = 2 to get within 1e-9 of the limit
    code, out, _ = run_cli(capsys, "verify", "bounds", "--n-max", "10")
    assert code == 1
    assert "upper_limit_convergence" in out
    assert "FAIL" in out


def test_missing_subcommand_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main([])
    assert exc.value.code == 2
