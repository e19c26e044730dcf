import pytest

from linfield import moore_trace
from linfield.cli import main
from linfield.laws import LAWS, moore_sign_matrix, run_law


@pytest.mark.parametrize("name", sorted(LAWS))
def test_law_passes_small_scale(name):
    res = run_law(name, seed=11, scale=0.02)
    assert res.passed, res.failures[:3]
    assert res.cases > 0


def test_sign_mutation_is_detected(monkeypatch):
    """Dropping the alternating sign must break the Moore adjugate law (visible over q = 3)."""

    def wrong_signs(tower, n):
        return [1] * n

    monkeypatch.setattr(moore_trace, "sign_matrix", wrong_signs)
    res = moore_sign_matrix(scale=0.05)
    assert not res.passed
    assert any("q=3 n=2" in f for f in res.failures)


def test_selftest_reports_failure(monkeypatch, capsys):
    monkeypatch.setattr(moore_trace, "sign_matrix", lambda tower, n: [1] * n)
    code = main(["selftest", "--law", "moore-sign-matrix", "--scale", "0.05"])
    out = capsys.readouterr().out
    assert code == 1
    assert "FAIL  moore adjugate sign matrix" in out


def test_selftest_unknown_law(capsys):
    assert main(["selftest", "--law", "nope"]) == 2
