"""
Integration Tests for the Verification Suites

Runs the suites behind `nullfil verify` end to end with reduced corpus
sizes. The full-size runs are marked slow.
"""

import json

import pytest
import yaml

import config.settings
from application.verification_service import VerificationService
from config.config_validator import DEFAULT_CONFIG_PATH, EngineConfig
from config.settings import Settings
from core.exceptions import InvalidArgumentError
from main import main

QUICK_SUITES = [
    "concordance",
    "minimality",
    "dimension",
    "codimension",
    "trichotomy",
    "homogeneous",
    "preimage",
    "closed_form",
]


@pytest.fixture(scope="module")
def small_settings():
    """Packaged defaults with small corpora"""
    with DEFAULT_CONFIG_PATH.open("r", encoding="utf-8") as handle:
        raw = yaml.safe_load(handle)
    suites = raw["verification"]
    suites["concordance"].update(corpus_size=25, algebra_sizes=[2, 3, 4])
    suites["dimension"].update(max_n=5, max_m=3)
    suites["codimension"]["max_m"] = 6
    suites["trichotomy"].update(corpus_size=15, primes=[2])
    suites["homogeneous"].update(corpus_size=10, max_n=3, primes=[2, 3])
    suites["preimage"]["targets"] = 30
    suites["closed_form"].update(right_power_cases=40, evaluation_cases=20)
    return Settings(config=EngineConfig.model_validate(raw))


@pytest.fixture(scope="module")
def quick_report(small_settings):
    """One run of every quick suite"""
    return VerificationService(small_settings).run(seed=20240611, suites=QUICK_SUITES)


class TestVerificationService:
    """Test suite for VerificationService.run()"""

    @pytest.mark.integration
    @pytest.mark.parametrize("name", QUICK_SUITES)
    def test_suite_passes(self, quick_report, name):
        """Test that each quick suite reports no failures"""
        suite = quick_report.suite(name)

        assert suite.failures == []
        assert suite.checked > 0

    @pytest.mark.integration
    def test_minimality_certificates(self, quick_report):
        """Test the recorded e_(n+1) certificates"""
        certificates = quick_report.suite("minimality").details["certificates"]

        assert certificates["3"]["value"] == "e4"

    @pytest.mark.integration
    def test_document(self, quick_report):
        """Test the verify document of a passing run"""
        document = quick_report.to_document()

        assert document.passed
        assert document.error is None
        assert [s.name for s in document.suites] == QUICK_SUITES

    @pytest.mark.integration
    def test_same_seed_same_report(self, small_settings):
        """Test that a run is reproducible from its seed"""
        service = VerificationService(small_settings)
        first = service.run(seed=3, suites=["homogeneous", "trichotomy"])
        second = service.run(seed=3, suites=["trichotomy", "homogeneous"])

        assert first.to_document() == second.to_document()

    @pytest.mark.integration
    def test_unknown_suite(self, small_settings):
        """Test that suite names are checked"""
        with pytest.raises(InvalidArgumentError):
            VerificationService(small_settings).run(suites=["speed"])

    @pytest.mark.integration
    @pytest.mark.slow
    def test_root_exponent_suite(self, small_settings):
        """Test the exhaustive experiment on the cone exponent"""
        report = VerificationService(small_settings).run(seed=5, suites=["root_exponent"])
        suite = report.suite("root_exponent")

        assert suite.passed
        assert suite.details["verdict"] == "gcd"
        assert suite.details["witnesses_consistent"] is True

    @pytest.mark.integration
    @pytest.mark.slow
    def test_full_default_run(self):
        """Test every suite at the packaged sizes"""
        report = VerificationService(Settings.from_file()).run()

        assert report.passed, [s.failures for s in report.suites if not s.passed]


class TestVerifyCommand:
    """Test suite for `nullfil verify`"""

    @pytest.fixture(autouse=True)
    def packaged_settings(self, monkeypatch):
        """Start from the packaged defaults"""
        monkeypatch.setattr(config.settings, "_settings", None)

    @pytest.mark.integration
    def test_verify_json(self, capsys):
        """Test one fast suite through the command line"""
        code = main(["verify", "--suite", "minimality", "--seed", "9", "--format", "json"])
        document = json.loads(capsys.readouterr().out)

        assert code == 0
        assert document["seed"] == 9
        assert document["passed"] is True
        assert document["suites"][0]["name"] == "minimality"

    @pytest.mark.integration
    def test_verify_text(self, capsys):
        """Test the text summary"""
        code = main(["verify", "--suite", "dimension", "--suite", "codimension"])
        out = capsys.readouterr().out

        assert code == 0
        assert "PASS dimension" in out
        assert out.strip().endswith("passed")
