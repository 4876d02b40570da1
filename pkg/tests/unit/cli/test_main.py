"""
Unit Tests for the Command Line

Runs main() in-process and checks stdout, stderr and exit codes.
"""

import json

import pytest

import config.settings
from main import main


@pytest.fixture(autouse=True)
def packaged_settings(monkeypatch):
    """Every test starts from the packaged defaults"""
    monkeypatch.setattr(config.settings, "_settings", None)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out.strip(), captured.err


class TestTextOutput:
    """Test suite for text-mode commands"""

    def test_dim(self, capsys):
        """Test dim of the relatively free algebra of L_3 in two variables"""
        code, out, _ = run(capsys, "dim", "--algebra", "3", "--m", "2")

        assert code == 0
        assert out == "11"

    def test_classify_commutator(self, capsys):
        """Test that x1 x2 - x2 x1 has image L^3 on L_3"""
        code, out, _ = run(capsys, "classify", "--algebra", "3", "x1 x2 - x2 x1")

        assert code == 0
        assert out.splitlines()[0] == "power_ideal k=3"

    def test_preimage_assignment(self, capsys):
        """Test the witness for e3 under x1 x2 - x2 x1"""
        code, out, _ = run(
            capsys, "preimage", "--algebra", "3", "x1 x2 - x2 x1", "--target", "e3"
        )

        assert code == 0
        assert out == "x1 = e2, x2 = e1"

    def test_preimage_needs_root(self, capsys):
        """Test that 2*e2 under x1^2 needs a square root of 2"""
        code, out, _ = run(
            capsys, "preimage", "--algebra", "3", "x1^2", "--target", "2*e2", "--format", "json"
        )
        document = json.loads(out)

        assert code == 0
        assert document["status"] == "needs_root"
        assert document["exponent"] == 2
        assert document["value"] == "2"
        assert document["root_modulo"]["p"] == 7

    def test_preimage_not_in_image(self, capsys):
        """Test a target outside the support of the image"""
        code, out, _ = run(
            capsys, "preimage", "--algebra", "3", "x1 x2 - x2 x1", "--target", "e2"
        )

        assert code == 0
        assert out.startswith("not in image: wrong_support")

    @pytest.mark.parametrize("m, expected", [(4, "1"), (6, "0")])
    def test_codim(self, capsys, m, expected):
        """Test multilinear codimensions of L_4"""
        code, out, _ = run(capsys, "codim", "--algebra", "4", "--m", str(m))

        assert code == 0
        assert out == expected

    def test_eval(self, capsys):
        """Test evaluation on explicit elements"""
        code, out, _ = run(
            capsys,
            "eval",
            "--algebra",
            "3",
            "x1 x2",
            "--assign",
            "x1=2*e1 + e2",
            "--assign",
            "x2=3*e1",
        )

        assert code == 0
        assert out == "6*e2 + 3*e3"

    def test_identity(self, capsys):
        """Test that x1 (x2 x3) is an identity of L_inf"""
        code, out, _ = run(capsys, "identity", "--algebra", "inf", "x1 (x2 x3)")

        assert code == 0
        assert out == "identity of L_inf: yes"

    def test_reduce_json(self, capsys):
        """Test the reduce document"""
        code, out, _ = run(
            capsys, "reduce", "--algebra", "3", "--format", "json", "x1 (x2 x3)"
        )
        document = json.loads(out)

        assert code == 0
        assert document["algebra"] == {"n": 3}
        assert document["is_identity"] is True
        assert document["rule_applications"] == 1

    def test_leading_minus_after_separator(self, capsys):
        """Test that -- lets the polynomial start with a minus sign"""
        code, out, _ = run(capsys, "reduce", "--algebra", "3", "--", "-x1^2")

        assert code == 0
        assert "normal form: -x1^2" in out.splitlines()


class TestErrors:
    """Test suite for error documents and exit codes"""

    def test_parse_error_json(self, capsys):
        """Test that a parse error becomes a JSON error document on stdout"""
        code, out, _ = run(capsys, "reduce", "--algebra", "3", "--format", "json", "x1 $ x2")
        document = json.loads(out)

        assert code == 1
        assert document["error"] == "parse_error"
        assert document["details"]["position"] == 3

    def test_parse_error_text(self, capsys):
        """Test that text mode reports errors on stderr with a caret"""
        code, out, err = run(capsys, "reduce", "--algebra", "3", "x1 $ x2")

        assert code == 1
        assert out == ""
        assert "error [parse_error]" in err
        assert "^" in err

    @pytest.mark.parametrize(
        "argv",
        [
            ["dim", "--algebra", "0", "--m", "2"],
            ["classify", "--algebra", "3", "--field", "fp:4", "x1"],
            ["dim", "--algebra", "3"],
            ["dim", "--algebra", "3", "--m", "0"],
        ],
    )
    def test_usage_errors(self, capsys, argv):
        """Test that malformed options exit through argparse"""
        assert main(argv) == 2

    def test_missing_config_file(self, capsys, tmp_path):
        """Test that an unreadable --config aborts before the command runs"""
        missing = tmp_path / "absent.yaml"
        code, out, _ = run(
            capsys, "dim", "--algebra", "3", "--m", "2", "--format", "json",
            "--config", str(missing),
        )

        assert code == 1
        assert json.loads(out)["error"] == "configuration_error"

    def test_dim_needs_finite_algebra(self, capsys):
        """Test that dim refuses L_inf"""
        code, out, _ = run(capsys, "dim", "--algebra", "inf", "--m", "2", "--format", "json")

        assert code == 1
        assert json.loads(out)["error"] == "invalid_argument"

    def test_inhomogeneous_classify(self, capsys):
        """Test that classify refuses mixed multidegrees"""
        code, out, _ = run(
            capsys, "classify", "--algebra", "3", "--format", "json", "x1 + x1 x2"
        )

        assert code == 1
        assert json.loads(out)["error"] == "not_homogeneous"
