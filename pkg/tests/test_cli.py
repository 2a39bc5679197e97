from __future__ import annotations

import io
import json
from pathlib import Path
from typing import Any, Dict, List, Tuple

import pytest

from cli import commands
from cli.jobs import parse_job
from cli.errors import UsageError
from kring.localized import Q
from wmodule.element import CORE_ORDER


def _run(argv: List[str]) -> Tuple[int, str]:
    stream = io.StringIO()
    status = commands.run_command(argv, stream=stream)
    return status, stream.getvalue()


def _run_json(argv: List[str]) -> Tuple[int, Dict[str, Any]]:
    status, text = _run(argv + ["--format", "json"])
    return status, json.loads(text)


def test_compute_char_text() -> None:
    status, text = _run(["compute-char", "--genus", "1", "--semisimple", "sym:x1"])
    assert status == 0
    assert "[Char] = q^2 + 4q + 1" in text
    assert "euler characteristic" in text


def test_compute_rep_json() -> None:
    status, payload = _run_json(["compute-rep", "--genus", "1", "--semisimple", "sym:x1"])
    assert status == 0
    assert payload["class"] == "q^5 + 4q^4 - 4q^2 - q"
    assert payload["coefficients"] == [0, -1, -4, 0, 4, 1]
    assert payload["euler_characteristic"] == 0
    assert payload["surface"]["genus"] == 1


def test_compute_rep_verify_reduces_jordan_minus() -> None:
    status, payload = _run_json(
        ["compute-rep", "--genus", "1", "--jordan-minus", "1", "--minus-id", "1", "--semisimple", "rat:2/1", "--verify"]
    )
    assert status == 0
    assert payload["verified"] is True


def test_compute_char_verify() -> None:
    status, payload = _run_json(["compute-char", "--genus", "1", "--semisimple", "rat:2", "--verify"])
    assert status == 0
    assert payload["verified"] is True
    assert payload["class"] == "q^2 + 4q + 1"


def test_verify_mismatch_exits_with_three(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setattr(commands, "rep_class_for_surface", lambda spec: Q)
    status, payload = _run_json(["compute-rep", "--genus", "1", "--semisimple", "rat:2", "--verify"])
    assert status == 3
    assert payload["error"]["code"] == "closed_form_mismatch"


def test_oracle_count_outside_the_regime_is_reported_not_failed() -> None:
    status, payload = _run_json(
        ["oracle-count", "--genus", "1", "--semisimple-trace", "0", "--prime", "5", "--compare"]
    )
    assert status == 0
    (result,) = payload["results"]
    assert result["count"] == 1920
    assert result["predicted"] == 5520
    assert result["admissible"] is False


def test_oracle_count_plain() -> None:
    status, text = _run(["oracle-count", "--genus", "1", "--prime", "3", "--prime", "5"])
    assert status == 0
    assert "p=3: |Rep| = 168" in text
    assert "p=5: |Rep| = 1080" in text


def test_tube_matrix_semisimple() -> None:
    status, payload = _run_json(["tube-matrix", "--tube", "Semisimple", "--semisimple", "rat:3"])
    assert status == 0
    assert payload["tube"] == "Semisimple"
    assert payload["reduced"] is True
    assert set(payload["columns"]) == {gen.value for gen in CORE_ORDER}


@pytest.mark.parametrize(
    "argv",
    [
        ["compute-rep", "--semisimple", "rat:0"],
        ["compute-rep", "--semisimple", "rat:"],
        ["compute-rep", "--genus", "-1"],
        ["compute-rep", "--no-such-flag"],
        ["oracle-count", "--genus", "1"],
        ["oracle-count", "--prime", "9"],
        ["tube-matrix"],
        ["tube-matrix", "--tube", "Semisimple"],
        [],
    ],
)
def test_usage_errors_exit_with_two(argv: List[str]) -> None:
    status, text = _run(argv)
    assert status == 2
    assert json.loads(text)["error"]["code"] == "usage_error"


def test_job_file_with_flag_override(tmp_path: Path) -> None:
    job = tmp_path / "job.json"
    job.write_text(json.dumps({"command": "compute-char", "genus": 2, "semisimple": ["sym:x1"], "format": "json"}))
    spec = parse_job(["--job", str(job), "--genus", "1"])
    assert spec.command == "compute-char"
    assert spec.genus == 1
    status, text = _run(["--job", str(job), "--genus", "1"])
    assert status == 0
    assert json.loads(text)["class"] == "q^2 + 4q + 1"


def test_unreadable_job_file(tmp_path: Path) -> None:
    job = tmp_path / "job.json"
    job.write_text("[1, 2]")
    with pytest.raises(UsageError):
        parse_job(["--job", str(job)])
    with pytest.raises(UsageError):
        parse_job(["--job", str(tmp_path / "missing.json")])


def test_missing_operator_data_is_an_engine_error(tmp_path: Path) -> None:
    status, text = _run(["compute-rep", "--genus", "1", "--data-file", str(tmp_path / "none.json")])
    assert status == 1
    assert json.loads(text)["error"]["code"] == "missing_operator_data"


def test_command_may_come_from_the_job_file_only(tmp_path: Path) -> None:
    job = tmp_path / "job.json"
    job.write_text(json.dumps({"command": "compute-rep", "genus": 1, "semisimple": ["sym:x1"]}))
    assert parse_job(["--job", str(job)]).command == "compute-rep"
    assert parse_job(["--job", str(job), "--genus", "2"]).genus == 2
    assert parse_job(["compute-char", "--job", str(job)]).command == "compute-char"


def test_unknown_command_is_a_usage_error() -> None:
    with pytest.raises(UsageError):
        parse_job(["compute-everything", "--genus", "1"])
    status, text = _run(["compute-everything"])
    assert status == 2
    assert json.loads(text)["error"]["code"] == "usage_error"
