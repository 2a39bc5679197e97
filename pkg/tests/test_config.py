from __future__ import annotations

from pathlib import Path

import pytest
from prometheus_client import REGISTRY

from engine_config import DEFAULT_DATA_FILE, DEFAULT_HANDLE_PRIMES, EngineConfig
from monitor.metrics import record_command_runtime, record_fit, record_oracle_count


def test_defaults(monkeypatch: pytest.MonkeyPatch) -> None:
    for name in ("CHARVAR_DATA_FILE", "CHARVAR_MAX_PRIME", "CHARVAR_WORK_LIMIT", "CHARVAR_HANDLE_PRIMES"):
        monkeypatch.delenv(name, raising=False)
    config = EngineConfig.from_env()
    assert config.data_file == DEFAULT_DATA_FILE
    assert config.max_prime == 61
    assert config.handle_primes == tuple(DEFAULT_HANDLE_PRIMES)


def test_environment_overrides(monkeypatch: pytest.MonkeyPatch, tmp_path: Path) -> None:
    monkeypatch.setenv("CHARVAR_DATA_FILE", str(tmp_path / "ops.json"))
    monkeypatch.setenv("CHARVAR_WORK_LIMIT", "5000")
    monkeypatch.setenv("CHARVAR_JORDAN_PRIMES", "13, 17,29")
    monkeypatch.setenv("CHARVAR_LOG_LEVEL", "debug")
    config = EngineConfig.from_env()
    assert config.data_file == tmp_path / "ops.json"
    assert config.work_limit == 5000
    assert config.jordan_primes == (13, 17, 29)
    assert config.log_level == "DEBUG"


def test_flag_overrides_skip_none() -> None:
    config = EngineConfig().with_overrides(data_file="other.json", work_limit=None, n_jobs=4)
    assert config.data_file == Path("other.json")
    assert config.work_limit == EngineConfig().work_limit
    assert config.n_jobs == 4


def test_metrics_are_recorded() -> None:
    before = REGISTRY.get_sample_value("charvar_oracle_points_total", {"prime": "101"}) or 0.0
    record_oracle_count(101, 24)
    assert REGISTRY.get_sample_value("charvar_oracle_points_total", {"prime": "101"}) == before + 24
    record_fit("JordanPlus", 8)
    assert REGISTRY.get_sample_value("charvar_fit_primes", {"kind": "JordanPlus"}) == 8
    record_command_runtime("verify", -1.0)
    assert REGISTRY.get_sample_value("charvar_command_runtime_seconds_count", {"command": "verify"}) >= 1
