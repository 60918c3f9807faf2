import pytest

from models import SUITES, CheckStatus
from services import verify_service
from services.errors import IdentityViolationError
from services.linear import Combination
from services.verify_service import Verifier, verify_EDQX, verify_geom_basis


def failures(checks):
    return [(c.check, c.witness) for c in checks if c.status == CheckStatus.FAIL]


@pytest.mark.parametrize("suite", ["lie", "signs", "colie", "models", "bar"])
def test_algebraic_suites_pass_at_weight_three(suite):
    report = Verifier(3, seed=7, samples=50).run([suite])
    assert report.suites == [suite]
    assert report.checks
    assert report.passed, failures(report.checks)


@pytest.mark.parametrize("word", ["01", "001", "011"])
def test_edqx_identities(word):
    checks = verify_EDQX(word)
    assert failures(checks) == []
    assert [c.status for c in checks].count(CheckStatus.INFO) == 1


def test_geom_basis_to_weight_three():
    assert failures(verify_geom_basis(3)) == []


def test_lift_and_unit_suites_at_weight_three():
    report = Verifier(3, samples=5).run(["lifts", "unit"])
    assert report.passed, failures(report.checks)
    unit = [c for c in report.checks if "oracle" in c.check and c.status != CheckStatus.INFO]
    assert unit and all(c.status == CheckStatus.PASS for c in unit)


def test_report_keeps_canonical_suite_order():
    report = Verifier(2, samples=2).run(["colie", "lie"])
    assert report.suites == ["lie", "colie"]
    assert report.max_weight == 2 and report.seed == 42


def test_all_suites_at_weight_four():
    report = Verifier(4, samples=50).run(SUITES)
    assert report.passed, failures(report.checks)


@pytest.mark.slow
@pytest.mark.parametrize("max_weight", [5, 6])
@pytest.mark.parametrize("suite", ["colie", "lifts", "edqx", "basis"])
def test_sweeps_to_weight_six(suite, max_weight):
    report = Verifier(max_weight, samples=50).run([suite])
    assert report.passed, failures(report.checks)


def test_strict_edqx_raises_with_the_failed_checks(monkeypatch):
    monkeypatch.setattr(verify_service, "lift_of_tag", lambda tag, space="x": Combination())
    assert len(failures(verify_EDQX("01"))) == 1
    with pytest.raises(IdentityViolationError) as info:
        verify_EDQX("01", strict=True)
    assert [c.check for c in info.value.checks] == ["cobracket of the L0 lift is the a/b combination of lifts [01]"]


def test_strict_geom_basis_returns_when_everything_holds():
    assert failures(verify_geom_basis(3, strict=True)) == []


def test_unit_suite_marks_the_catalan_constants_non_closed():
    report = Verifier(3, samples=5).run(["unit"])
    flagged = [c for c in report.checks if c.status == CheckStatus.NON_CLOSED]
    assert len(flagged) == 3
    assert all(c.witness.startswith("constants 1/2, 1/8") for c in flagged)
    assert report.passed
