import json
import math

import numpy as np
import pytest

from shnr import serialize
from shnr.cli import main

REMARK_T = np.array([[0, 1, 0], [0, 0, 0], [0, 0, 2]], dtype=complex)


@pytest.fixture
def files(tmp_path):
    def write(name, m):
        path = tmp_path / name
        serialize.save_matrix(path, m)
        return str(path)

    return {
        "i3": write("i3.json", np.eye(3)),
        "remark": write("remark.json", REMARK_T),
        "i2": write("i2.json", np.eye(2)),
        "nil2": write("nil2.json", np.array([[0.0, 1.0], [0.0, 0.0]])),
        "diag10": write("diag10.json", np.diag([1.0, 0.0])),
        "member2": write("member2.json", np.array([[2.0, 0.0], [3.0, 7.0]])),
        "indefinite": write("indefinite.json", np.diag([-1.0, 1.0])),
        "tmp": tmp_path,
    }


class TestCompute:
    def test_omega_a_remark_prints_twelve_digits(self, files, capsys):
        assert main(["compute", files["i3"], files["remark"], "omega_a"]) == 0
        assert capsys.readouterr().out.strip() == "2.00000000000"

    def test_big_omega_remark(self, files, capsys):
        assert main(["compute", files["i3"], files["remark"], "big_omega"]) == 0
        out = capsys.readouterr().out.strip()
        assert abs(float(out) - 2 * math.sqrt(2)) <= 1e-6
        assert out.startswith("2.8284271247")

    def test_gamma_and_gen_radius(self, files, capsys):
        assert main(["compute", files["i3"], files["remark"], "gamma_a"]) == 0
        gamma = float(capsys.readouterr().out)
        assert gamma == pytest.approx(2 * math.sqrt(2), abs=1e-6)
        assert (
            main(
                [
                    "compute", files["i3"], files["remark"], "gen_radius",
                    "--seminorm", "big_omega",
                ]
            )
            == 0
        )
        assert float(capsys.readouterr().out) == pytest.approx(
            2 * math.sqrt(2), abs=1e-6
        )

    def test_alpha_norm(self, files, capsys):
        rc = main(
            ["compute", files["i2"], files["nil2"], "alpha_norm", "--alpha", "0.5"]
        )
        assert rc == 0
        assert float(capsys.readouterr().out) == pytest.approx(
            math.sqrt(0.5), abs=1e-9
        )

    def test_alpha_norm_requires_alpha(self, files, capsys):
        assert main(["compute", files["i2"], files["nil2"], "alpha_norm"]) == 2

    def test_adjoint_prints_matrix(self, files, capsys):
        assert main(["compute", files["diag10"], files["member2"], "adjoint"]) == 0
        out = json.loads(capsys.readouterr().out)
        m = serialize.matrix_from_dict(out)
        np.testing.assert_allclose(m, np.array([[2.0, 0.0], [0.0, 0.0]]), atol=1e-12)

    def test_non_member_exits_3(self, files, capsys):
        assert main(["compute", files["diag10"], files["nil2"], "adjoint"]) == 3

    def test_indefinite_a_exits_4(self, files):
        assert main(["compute", files["indefinite"], files["nil2"], "norm_a"]) == 4

    def test_parse_error_exits_2(self, files, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        assert main(["compute", str(bad), files["nil2"], "norm_a"]) == 2

    def test_shape_error_exits_2(self, files):
        assert main(["compute", files["i3"], files["nil2"], "norm_a"]) == 2

    def test_unknown_quantity_usage_error(self, files):
        with pytest.raises(SystemExit) as exc:
            main(["compute", files["i3"], files["remark"], "nonsense"])
        assert exc.value.code == 2


class TestMembership:
    def test_identity_member(self, files, capsys):
        assert main(["membership", files["i2"], files["nil2"]]) == 0
        out = capsys.readouterr().out
        assert out.startswith("member")
        assert "residual=0.0" in out

    def test_non_member_residual_one(self, files, capsys):
        assert main(["membership", files["diag10"], files["nil2"]]) == 3
        out = capsys.readouterr().out
        assert out.startswith("non-member")
        assert "residual=1.00000000000" in out

    def test_block_member(self, files, capsys):
        assert main(["membership", files["diag10"], files["member2"]]) == 0

    def test_rtol_env_changes_verdict(self, files, tmp_path, monkeypatch, capsys):
        a = tmp_path / "a_soft.json"
        serialize.save_matrix(a, np.diag([1.0, 0.4]))
        # default tolerance: full rank, everything is a member
        assert main(["membership", str(a), files["nil2"]]) == 0
        capsys.readouterr()
        # huge rtol collapses the small eigenvalue out of the range
        monkeypatch.setenv("SHNR_RTOL", "0.45")
        assert main(["membership", str(a), files["nil2"]]) == 3

    def test_bad_rtol_env(self, files, monkeypatch):
        monkeypatch.setenv("SHNR_RTOL", "banana")
        assert main(["membership", files["i2"], files["nil2"]]) == 2


class TestCheck:
    def test_only_c26_report(self, files, capsys):
        out = files["tmp"] / "r.json"
        rc = main(
            [
                "check", "--only", "C26", "--dims", "2", "--instances", "3",
                "--seed", "42", "--out", str(out),
            ]
        )
        assert rc == 0
        report = json.loads(out.read_text())
        c26 = report["checks"][0]
        assert c26["id"] == "C26"
        assert c26["violations"] == 0
        target = 2 * math.sqrt(2)
        assert abs(c26["worst_witness"]["lhs"] - target) <= 1e-4
        assert "C26 ok" in capsys.readouterr().out

    def test_exit_zero_and_determinism(self, files, capsys):
        out1 = files["tmp"] / "r1.json"
        out2 = files["tmp"] / "r2.json"
        args = [
            "check", "--dims", "2", "--ranks", "full,half", "--instances", "4",
            "--seed", "7", "--only", "C17,C18,C19,C27",
        ]
        assert main(args + ["--out", str(out1), "--threads", "1"]) == 0
        assert main(args + ["--out", str(out2), "--threads", "3"]) == 0
        assert out1.read_bytes() == out2.read_bytes()

    def test_bad_flags_exit_2(self, files):
        assert main(["check", "--dims", "x", "--out", "nowhere.json"]) == 2
        assert main(["check", "--dims", "1", "--out", "nowhere.json"]) == 2
        assert main(["check", "--only", "C99", "--out", "nowhere.json"]) == 2
