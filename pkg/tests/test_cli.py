import json

import pytest

from palincf.cli import check_case, generate_cases, main, run_verify


def run_json(capsys, *argv):
    code = main([*argv, "--format", "json"])
    out = capsys.readouterr().out
    return code, [json.loads(line) for line in out.splitlines()]


def test_schema(capsys):
    code, (rec,) = run_json(capsys, "construct", "-p", "2,5,5,2", "-k", "-11")
    assert code == 0
    assert set(rec) == {"command", "input", "result", "verified", "branch"}
    assert rec["input"] == {"palindrome": "2,5,5,2", "k": "-11", "a0": "0"}
    res = rec["result"]
    assert (res["s"], res["t"], res["k_min"]) == ("107", "-49", "-11")
    assert res["expansion"] == {"preperiod": ["0"], "period": ["2", "5", "5", "2", "107"]}
    assert rec["verified"] and rec["branch"] == "match"


def test_construct_collapse(capsys):
    code, (rec,) = run_json(capsys, "construct", "-p", "1,1,3,1,1", "-k", "3")
    assert code == 0 and rec["branch"] == "collapse"
    assert rec["result"]["period_length"] == "3"


def test_construct_below_bound(capsys):
    code, (rec,) = run_json(capsys, "construct", "-p", "1", "-k", "0")
    assert code == 2
    assert rec["result"]["error"] == "KTooSmall"


def test_bad_palindrome(capsys):
    code, (rec,) = run_json(capsys, "construct", "-p", "1,2", "-k", "5")
    assert code == 2 and rec["result"]["error"] == "NotPalindrome"


def test_missing_option():
    assert main(["beta", "-n", "2"]) == 2


def test_unknown_command():
    assert main(["frobnicate"]) == 2


def test_beta(capsys):
    code, (rec,) = run_json(capsys, "beta", "-n", "2", "-m", "100", "-k", "2")
    assert code == 0 and rec["branch"] == "case1"
    assert rec["result"]["cf"]["preperiod"] == ["20102"]
    assert rec["result"]["cf"]["period"] == ["50", "200", "10051", "200", "50", "40204"]


def test_beta_generic(capsys):
    code, (rec,) = run_json(capsys, "beta", "-n", "3", "-m", "1", "-k", "5")
    assert code == 0 and rec["branch"] == "generic" and rec["verified"]


@pytest.mark.parametrize(
    "argv,D,pair",
    [
        (("-n", "2", "-m", "2", "-k", "3", "--sign", "-1"), "317", ("352618", "19805")),
        (("-n", "1", "-m", "2", "-k", "2", "--sign", "1"), "24", ("5", "1")),
    ],
)
def test_pell(capsys, argv, D, pair):
    code, (rec,) = run_json(capsys, "pell", *argv)
    res = rec["result"]
    assert code == 0 and (res["D"], res["x"], res["y"]) == (D, *pair)
    assert res["minimal"] is True


def test_pell_parity(capsys):
    code, (rec,) = run_json(capsys, "pell", "-n", "1", "-m", "2", "-k", "2", "--sign", "-1")
    assert code == 2 and rec["result"]["error"] == "ParityViolated"


def test_sqrt_family(capsys):
    code, (rec,) = run_json(capsys, "sqrt-family", "-p", "2", "-c", "2")
    assert code == 0
    assert [(r["a0"], r["D"]) for r in rec["result"]["rows"]] == [("1", "2"), ("2", "6")]

    code, (rec,) = run_json(capsys, "sqrt-family", "-p", "2,5,5,2", "-c", "1")
    assert code == 0 and rec["result"]["rows"][0]["a0"] == "116"

    code, (rec,) = run_json(capsys, "sqrt-family", "-p", "1,1", "-c", "1")
    assert code == 2 and rec["result"]["error"] == "NotAdmissible"


def test_families(capsys):
    code, (rec,) = run_json(capsys, "families", "creepers", "-m", "2", "-j", "1..5")
    assert code == 0
    assert [r["period_length"] for r in rec["result"]["rows"]] == ["6", "10", "14", "18", "22"]

    code, (rec,) = run_json(capsys, "families", "sleepers", "-n", "2", "-k", "2", "-m", "3..3")
    assert code == 0 and rec["result"]["rows"][0]["branch"] == "generic"


def test_families_skips_bad_rows(capsys):
    code, (rec,) = run_json(capsys, "families", "sleepers", "-n", "2", "-k", "0", "-m", "2,4")
    assert code == 2
    assert len(rec["result"]["skipped"]) == 2


def test_text_output(capsys):
    assert main(["beta", "-n", "1", "-m", "2", "-k", "2"]) == 0
    out = capsys.readouterr().out
    assert "cf: [4; (1, 8)]" in out and "branch: meno" in out


@pytest.mark.parametrize("jobs", ["1", "3"])
def test_batch_preserves_order(capsys, tmp_path, jobs):
    lines = [f"2 {2 * x} 2" for x in range(1, 9)] + ["2 2 0", "# comment", "3 1 5"]
    path = tmp_path / "beta.txt"
    path.write_text("\n".join(lines) + "\n")
    code, recs = run_json(capsys, "beta", "--batch", str(path), "--jobs", jobs)
    assert code == 2
    assert [r["input"].get("m") for r in recs] == [str(2 * x) for x in range(1, 9)] + ["2", "1"]
    assert recs[8]["result"]["error"] == "KTooSmall"


def test_batch_bad_line(capsys, tmp_path):
    path = tmp_path / "p.txt"
    path.write_text("2 2 3 -1\n2 2\n")
    code, recs = run_json(capsys, "pell", "--batch", str(path))
    assert code == 2
    assert recs[0]["verified"] and "error" in recs[1]["result"]


class TestVerify:
    def test_deterministic(self):
        assert generate_cases("beta", 20, 7) == generate_cases("beta", 20, 7)
        assert generate_cases("beta", 20, 7) != generate_cases("beta", 20, 8)

    def test_detects_failure(self, monkeypatch):
        import palincf.cli as cli

        monkeypatch.setattr(cli, "check_case", lambda case: (False, "x", "y"))
        rec = run_verify("raney", 3, 0)
        assert not rec["verified"] and len(rec["result"]["failures"]) == 3

    def test_single_case(self):
        ok, _, _ = check_case(("pell", 2, 2, 3))
        assert ok

    def test_all(self, capsys):
        code, (rec,) = run_json(capsys, "verify", "--suite", "all", "--budget", "10", "--seed", "0")
        assert code == 0 and rec["result"]["total"] == "40"

    def test_parallel_matches_serial(self):
        a = run_verify("pell", 30, 1, jobs=1)
        b = run_verify("pell", 30, 1, jobs=2)
        assert a == b and a["verified"]
