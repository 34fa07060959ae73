import importlib

import pytest

from cubegrowth import config


@pytest.fixture
def reload_config(monkeypatch):
    def reload(**env):
        for key, value in env.items():
            monkeypatch.setenv(key, value)
        return importlib.reload(config)

    yield reload
    monkeypatch.undo()
    importlib.reload(config)


def test_log_levels_are_read_from_separate_variables(reload_config):
    reloaded = reload_config(LOG_LEVEL="debug", API_LOG_LEVEL="error")
    assert reloaded.LOG_LEVEL == "DEBUG"
    assert reloaded.API_LOG_LEVEL == "ERROR"


def test_cli_log_level_does_not_leak_into_the_api(reload_config, monkeypatch):
    monkeypatch.delenv("API_LOG_LEVEL", raising=False)
    reloaded = reload_config(LOG_LEVEL="DEBUG")
    assert reloaded.LOG_LEVEL == "DEBUG"
    assert reloaded.API_LOG_LEVEL == "INFO"
