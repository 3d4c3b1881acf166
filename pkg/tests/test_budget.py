import pytest

from ci_toric import Budget, budget_from_env
from ci_toric.budget import ENV_VAR


def test_defaults(monkeypatch):
    monkeypatch.delenv(ENV_VAR, raising=False)
    assert budget_from_env() == Budget()


def test_override(monkeypatch):
    monkeypatch.setenv(ENV_VAR, "walk=22, dominating=30")
    b = budget_from_env()
    assert (b.walk, b.dominating) == (22, 30)


@pytest.mark.parametrize("raw", ["nope=1", "walk", "walk=x"])
def test_rejects(monkeypatch, raw):
    monkeypatch.setenv(ENV_VAR, raw)
    with pytest.raises(ValueError):
        budget_from_env()
