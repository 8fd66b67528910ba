"""Tests for configuration loading."""

import pytest

from src.core.config import Config
from src.core.exceptions import ConfigError


@pytest.fixture
def no_env(monkeypatch):
    monkeypatch.delenv("RSKLAB_WORKERS", raising=False)
    monkeypatch.delenv("RSKLAB_LOG_LEVEL", raising=False)


def write(tmp_path, text):
    path = tmp_path / "settings.yaml"
    path.write_text(text, encoding="utf-8")
    return str(path)


def test_defaults():
    config = Config()
    assert config.search.max_exhaustive_n == 9
    assert config.search.workers >= 1
    assert config.sequences.residual_tolerance == 1e-9
    assert config.output.format == "json"
    assert config.validate() == []


def test_yaml_overlay(tmp_path, no_env):
    path = write(tmp_path, "search:\n  seed: 42\n  trials: 7\noutput:\n  format: csv\n")
    config = Config.load(path)
    assert config.search.seed == 42
    assert config.search.trials == 7
    assert config.output.format == "csv"
    assert config.sequences.max_k == 4
    assert str(config.source) == path


def test_empty_yaml(tmp_path, no_env):
    config = Config.load(write(tmp_path, ""))
    assert config.search.seed == 0


@pytest.mark.parametrize("text", ["bogus:\n  x: 1\n", "search:\n  nope: 1\n", "- a\n- b\n"])
def test_bad_yaml(tmp_path, no_env, text):
    with pytest.raises(ConfigError):
        Config.load(write(tmp_path, text))


def test_missing_explicit_path(tmp_path):
    with pytest.raises(ConfigError):
        Config.load(str(tmp_path / "absent.yaml"))


def test_env_workers(tmp_path, monkeypatch):
    monkeypatch.setenv("RSKLAB_WORKERS", "3")
    monkeypatch.setenv("RSKLAB_LOG_LEVEL", "debug")
    config = Config.load(write(tmp_path, "search:\n  workers: 8\n"))
    assert config.search.workers == 3
    assert config.logging.level == "DEBUG"


def test_env_workers_not_integer(tmp_path, monkeypatch):
    monkeypatch.setenv("RSKLAB_WORKERS", "many")
    with pytest.raises(ConfigError):
        Config.load(write(tmp_path, ""))


def test_override_skips_missing_flags():
    config = Config().override(seed=9, trials=None, format="text", prune=True, unknown=1)
    assert config.search.seed == 9
    assert config.search.trials == 1000
    assert config.output.format == "text"
    assert config.search.prune_symmetry is True


def test_validate_reports_problems():
    config = Config().override(format="xml", workers=0, log_level="LOUD")
    errors = config.validate()
    assert len(errors) == 3
    assert any("format" in e for e in errors)
