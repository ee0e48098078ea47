import json
import subprocess
import sys

import pytest

from fusion2 import cli
from fusion2.basedring import make_kn, ring_to_json


def run_cli(capsys, *argv):
    code = cli.run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestRingCommands:
    def test_kn_roundtrip_range(self, capsys, tmp_path):
        for n in range(21):
            path = tmp_path / f"k{n}.json"
            code, _, _ = run_cli(capsys, "ring", "kn", "--n", str(n),
                                 "--out", str(path))
            assert code == 0
            code, out, _ = run_cli(capsys, "ring", "validate", str(path))
            assert code == 0 and "VALID" in out

    def test_kn_stdout(self, capsys):
        code, out, _ = run_cli(capsys, "ring", "kn", "--n", "1")
        assert code == 0
        assert json.loads(out)["N"][1][1] == [1, 1]

    def test_validate_malformed_exits_2(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        code, _, err = run_cli(capsys, "ring", "validate", str(path))
        assert code == 2 and err

    def test_validate_missing_file_exits_2(self, capsys, tmp_path):
        code, _, _ = run_cli(capsys, "ring", "validate", str(tmp_path / "no.json"))
        assert code == 2

    def test_validate_broken_axioms_exits_1(self, capsys, tmp_path):
        ring = make_kn(1)
        doc = json.loads(ring_to_json(ring))
        doc["N"][1][1][0] = 2
        path = tmp_path / "broken.json"
        path.write_text(json.dumps(doc))
        code, out, _ = run_cli(capsys, "ring", "validate", str(path))
        assert code == 1 and "FAIL" in out

    def test_validate_json_mode(self, capsys, tmp_path):
        path = tmp_path / "k1.json"
        path.write_text(ring_to_json(make_kn(1)))
        code, out, _ = run_cli(capsys, "ring", "validate", str(path), "--json")
        assert code == 0
        assert json.loads(out) == {"valid": True, "violations": []}

    def test_boxtimes(self, capsys, tmp_path):
        a = tmp_path / "a.json"
        b = tmp_path / "b.json"
        a.write_text(ring_to_json(make_kn(1)))
        b.write_text(ring_to_json(make_kn(0)))
        code, out, _ = run_cli(capsys, "ring", "boxtimes", str(a), str(b))
        assert code == 0
        assert json.loads(out)["rank"] == 4


class TestFpdim:
    def test_k1(self, capsys, tmp_path):
        path = tmp_path / "k1.json"
        path.write_text(ring_to_json(make_kn(1)))
        code, out, _ = run_cli(capsys, "fpdim", str(path))
        assert code == 0
        assert out.splitlines() == ["1: 1", "X: 1/2 + 1/2*sqrt(5)"]

    def test_json_mode(self, capsys, tmp_path):
        path = tmp_path / "k2.json"
        path.write_text(ring_to_json(make_kn(2)))
        code, out, _ = run_cli(capsys, "fpdim", str(path), "--json")
        assert code == 0
        payload = json.loads(out)
        assert payload["dims"][1]["exact"] == "1 + 1*sqrt(2)"


class TestCenter:
    def test_summary(self, capsys):
        code, out, _ = run_cli(capsys, "center", "--n", "1")
        assert code == 0
        assert "M = X⊠X: 1*A + 1*X1 + 1*X2 + 2*Y" in out

    def test_verify(self, capsys):
        code, out, _ = run_cli(capsys, "center", "--n", "4", "--verify")
        assert code == 0
        assert "hom-counting checks: PASS" in out
        assert "VERIFIED via bijection (0, 2, 1, 3)" in out
        assert "forgetful homomorphism: PASS" in out

    def test_json(self, capsys):
        code, out, _ = run_cli(capsys, "center", "--n", "2", "--json")
        assert code == 0
        payload = json.loads(out)
        assert payload["decompositions"]["X⊠X"] == [1, 2, 2, 5]
        assert payload["center_ring"]["labels"] == ["1", "X1", "X2", "Y"]


class TestClassify:
    def test_sweep_totals(self, capsys):
        code, out, _ = run_cli(capsys, "classify", "--upto", "10")
        assert code == 0
        lines = out.splitlines()
        assert lines[0].startswith("n=0: 2 categorifications")
        assert lines[1].startswith("n=1: 2 categorifications")
        for n in range(2, 11):
            assert lines[n].startswith(f"n={n}: 0 categorifications")
        assert lines[-1] == "total categorifications for 0 <= n <= 10: 4"

    def test_single_n(self, capsys):
        code, out, _ = run_cli(capsys, "classify", "--n", "2")
        assert code == 0
        assert "2 + 2*sqrt(2)" in out

    def test_json(self, capsys):
        code, out, _ = run_cli(capsys, "classify", "--upto", "3", "--json")
        assert code == 0
        payload = json.loads(out)
        assert payload["total"] == 4
        assert payload["results"][2]["verdict"]["kind"] == "impossible"

    def test_requires_mode(self, capsys):
        code, _, _ = run_cli(capsys, "classify")
        assert code == 2


class TestPentagon:
    def test_solve_n1(self, capsys):
        code, out, _ = run_cli(capsys, "pentagon", "--n", "1", "--solve")
        assert code == 0
        assert "lambda = 1" in out
        assert "dim(X) = 1/2 + 1/2*sqrt(5)" in out
        assert "dim(X) = 1/2 - 1/2*sqrt(5)" in out

    def test_solve_n0(self, capsys):
        code, out, _ = run_cli(capsys, "pentagon", "--n", "0", "--solve")
        assert code == 0
        assert "alpha = 1" in out and "alpha = -1" in out

    def test_verify_good(self, capsys, tmp_path):
        code, out, _ = run_cli(capsys, "pentagon", "--n", "1", "--solve", "--json")
        solution = json.loads(out)["solutions"][0]
        solution.pop("dim")
        path = tmp_path / "fdata.json"
        path.write_text(json.dumps(solution))
        code, out, _ = run_cli(capsys, "pentagon", "--n", "1",
                               "--verify", str(path))
        assert code == 0 and "SATISFIED" in out

    def test_verify_bad_exits_1(self, capsys, tmp_path):
        path = tmp_path / "fdata.json"
        path.write_text(json.dumps({
            "n": 1, "lambda": "1",
            "M": [["1", "1"], ["1", "-1"]],
        }))
        code, out, _ = run_cli(capsys, "pentagon", "--n", "1",
                               "--verify", str(path))
        assert code == 1 and "VIOLATED" in out

    def test_unsupported_n_exits_2(self, capsys):
        code, _, _ = run_cli(capsys, "pentagon", "--n", "2", "--solve")
        assert code == 2


class TestLandau:
    def test_listing(self, capsys):
        code, out, _ = run_cli(capsys, "landau", "--n", "3", "--list")
        assert code == 0
        assert out == "2 3 6\n2 4 4\n3 3 3\ncount=3 max=6\n"

    def test_summary_only(self, capsys):
        code, out, _ = run_cli(capsys, "landau", "--n", "4")
        assert code == 0
        assert out == "count=14 max=42\n"

    def test_custom_target(self, capsys):
        code, out, _ = run_cli(capsys, "landau", "--n", "2", "--r", "1/2",
                               "--list")
        assert code == 0
        assert out == "3 6\n4 4\ncount=2 max=6\n"

    def test_empty_target(self, capsys):
        code, out, _ = run_cli(capsys, "landau", "--n", "1", "--r", "2/3")
        assert code == 0
        assert out == "count=0\n"

    def test_ceiling_exit_2(self, capsys):
        code, _, _ = run_cli(capsys, "landau", "--n", "8")
        assert code == 2

    def test_env_ceiling(self, capsys, monkeypatch):
        monkeypatch.setenv("FUSION2_MAX_EGYPTIAN", "3")
        code, _, _ = run_cli(capsys, "landau", "--n", "4")
        assert code == 2

    def test_bad_target_exit_2(self, capsys):
        code, _, _ = run_cli(capsys, "landau", "--n", "2", "--r", "x/y")
        assert code == 2

    def test_json(self, capsys):
        code, out, _ = run_cli(capsys, "landau", "--n", "3", "--json", "--list")
        assert code == 0
        payload = json.loads(out)
        assert payload == {
            "n": 3, "target": "1", "count": 3, "max": 6,
            "solutions": [[2, 3, 6], [2, 4, 4], [3, 3, 3]],
        }


class TestHopfCheck:
    def test_z2(self, capsys):
        code, out, _ = run_cli(capsys, "hopf-check", "--blocks", "1:2,1:2",
                               "--dim", "2")
        assert code == 0
        assert "hopf-check: PASS" in out

    def test_s3(self, capsys):
        code, out, _ = run_cli(capsys, "hopf-check", "--blocks", "1:6,1:2,1:3",
                               "--dim", "6")
        assert code == 0

    def test_failure_exits_1(self, capsys):
        code, out, _ = run_cli(capsys, "hopf-check", "--blocks", "1:2,1:3")
        assert code == 1
        assert "hopf-check: FAIL" in out

    def test_malformed_blocks_exit_2(self, capsys):
        code, _, _ = run_cli(capsys, "hopf-check", "--blocks", "1-2")
        assert code == 2

    def test_json(self, capsys):
        code, out, _ = run_cli(capsys, "hopf-check", "--blocks", "1:2,1:2",
                               "--json")
        assert code == 0
        assert json.loads(out)["ok"] is True


class TestExitDiscipline:
    def test_unknown_command(self, capsys):
        assert run_cli(capsys, "frobnicate")[0] == 2

    def test_help_exits_0(self, capsys):
        assert run_cli(capsys, "--help")[0] == 0

    def test_determinism(self, capsys):
        first = run_cli(capsys, "classify", "--upto", "6")
        second = run_cli(capsys, "classify", "--upto", "6")
        assert first == second
        third = run_cli(capsys, "landau", "--n", "5", "--list")
        fourth = run_cli(capsys, "landau", "--n", "5", "--list")
        assert third == fourth


class TestSubprocessEntryPoint:
    def test_module_invocation(self):
        proc = subprocess.run(
            [sys.executable, "-m", "fusion2", "classify", "--upto", "4"],
            capture_output=True, text=True, timeout=120,
        )
        assert proc.returncode == 0
        assert "total categorifications for 0 <= n <= 4: 4" in proc.stdout

    def test_usage_error_code(self):
        proc = subprocess.run(
            [sys.executable, "-m", "fusion2", "landau"],
            capture_output=True, text=True, timeout=120,
        )
        assert proc.returncode == 2
