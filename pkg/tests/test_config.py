"""tests.test_config.py"""
from totgraph.config import DEFAULT_POOL, _Settings, get_settings


def test_default_settings():
    settings = get_settings()
    assert settings.arithmetic_cap == 4096
    assert settings.graph_cap == 1024
    assert settings.max_order == 64
    assert settings.solver_cap == 32
    assert settings.total_pool == DEFAULT_POOL
    assert settings.workers == 1


def test_get_settings_is_cached():
    assert get_settings() is get_settings()


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("SOLVER_CAP", "12")
    monkeypatch.setenv("TOTAL_POOL", '["Z2", "GF(4)"]')
    settings = _Settings(_env_file=None)
    assert settings.solver_cap == 12
    assert settings.total_pool == ["Z2", "GF(4)"]
