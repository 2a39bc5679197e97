"""Configuration helpers for the character-variety engine."""
from __future__ import annotations

import os
from dataclasses import dataclass, replace
from pathlib import Path
from typing import List

from dotenv import load_dotenv


REPO_ROOT = Path(__file__).resolve().parent

# Load environment variables from the project root `.env` file once this module is imported.
load_dotenv(dotenv_path=REPO_ROOT / ".env", override=False)

DEFAULT_DATA_FILE = REPO_ROOT / "data" / "operators.json"
DEFAULT_HANDLE_PRIMES = [13, 17, 29, 37, 41, 53, 61, 73, 89]
DEFAULT_JORDAN_PRIMES = [13, 17, 29, 37, 41, 53, 61, 73]


def _parse_csv(value: str | None) -> List[str]:
    if not value:
        return []
    return [item.strip() for item in value.split(",") if item.strip()]


def _parse_int_csv(value: str | None) -> List[int]:
    return [int(item) for item in _parse_csv(value)]


@dataclass(frozen=True)
class EngineConfig:
    data_file: Path = DEFAULT_DATA_FILE
    max_prime: int = 61
    fit_max_prime: int = 101
    work_limit: int = 1_000_000_000
    n_jobs: int = 1
    handle_primes: tuple[int, ...] = tuple(DEFAULT_HANDLE_PRIMES)
    jordan_primes: tuple[int, ...] = tuple(DEFAULT_JORDAN_PRIMES)
    alpha_cap: int = 24
    log_level: str = "WARNING"

    @classmethod
    def from_env(cls) -> "EngineConfig":
        data_file = os.getenv("CHARVAR_DATA_FILE")
        return cls(
            data_file=Path(data_file) if data_file else DEFAULT_DATA_FILE,
            max_prime=int(os.getenv("CHARVAR_MAX_PRIME", "61")),
            fit_max_prime=int(os.getenv("CHARVAR_FIT_MAX_PRIME", "101")),
            work_limit=int(os.getenv("CHARVAR_WORK_LIMIT", "1000000000")),
            n_jobs=int(os.getenv("CHARVAR_N_JOBS", "1")),
            handle_primes=tuple(_parse_int_csv(os.getenv("CHARVAR_HANDLE_PRIMES")) or DEFAULT_HANDLE_PRIMES),
            jordan_primes=tuple(_parse_int_csv(os.getenv("CHARVAR_JORDAN_PRIMES")) or DEFAULT_JORDAN_PRIMES),
            alpha_cap=int(os.getenv("CHARVAR_ALPHA_CAP", "24")),
            log_level=os.getenv("CHARVAR_LOG_LEVEL", "WARNING").upper(),
        )

    def with_overrides(self, **changes: object) -> "EngineConfig":
        """Return a copy with the non-None overrides applied (CLI flags win over the environment)."""
        effective = {key: value for key, value in changes.items() if value is not None}
        if "data_file" in effective:
            effective["data_file"] = Path(effective["data_file"])  # type: ignore[arg-type]
        return replace(self, **effective)
