import json
from pathlib import Path

import pytest

from src import constants
from src.config import DEFAULT_CONFIG, load_config, resolve_run_config
from src.errors import ConfigError


@pytest.fixture(autouse=True)
def isolated(monkeypatch, tmp_path):
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv(constants.WORDNET_ENV_VAR, raising=False)


def test_defaults():
    cfg = resolve_run_config()
    assert cfg.weights == (1.0, 1.0, 2.0)
    assert cfg.wordnet_dir is None
    assert cfg.stopword_file == constants.DEFAULT_STOPWORD_FILE
    assert cfg.wsd_overlap_threshold == 0.5
    assert cfg.max_depth == 16
    assert cfg.output_format == "json"
    assert cfg.parallelism == 1
    assert cfg.allow_network is False


def test_precedence(tmp_path, monkeypatch):
    Path("config.json").write_text(json.dumps({"max_depth": 5, "wordnet_dir": "/from/file", "parallelism": 2}))
    monkeypatch.setenv(constants.WORDNET_ENV_VAR, "/from/env")
    cfg = resolve_run_config({"max_depth": 7, "parallelism": None})
    assert cfg.max_depth == 7
    assert cfg.parallelism == 2
    assert cfg.wordnet_dir == Path("/from/env")


def test_weights_from_flag_string():
    assert resolve_run_config({"weights": "0, 0, 1"}).weights == (0.0, 0.0, 1.0)


@pytest.mark.parametrize("overrides", [
    {"weights": "1,x,2"},
    {"weights": [1, 2]},
    {"output_format": "xml"},
    {"parallelism": 0},
    {"max_depth": 0},
    {"wsd_overlap_threshold": 1.5},
])
def test_invalid_values(overrides):
    with pytest.raises(ConfigError):
        resolve_run_config(overrides)


def test_config_file_overrides_defaults():
    assert load_config() == DEFAULT_CONFIG
    Path("config.json").write_text(json.dumps({"output_format": "table"}))
    assert load_config()["output_format"] == "table"
    assert load_config()["weights"] == DEFAULT_CONFIG["weights"]


def test_unreadable_config_falls_back_to_defaults():
    Path("config.json").write_text("{not json")
    assert load_config() == DEFAULT_CONFIG
