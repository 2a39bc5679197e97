"""Versioned JSON store for the fitted Handle and Jordan core matrices."""
from __future__ import annotations

import hashlib
import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Iterable, List, Sequence, Tuple

from kring.localized import P3, LocalizedClass
from operators.errors import MissingOperatorData, OperatorDataCorrupt
from operators.linear import TubeKind
from wmodule.element import CORE_ORDER, CoreGenerator

logger = logging.getLogger(__name__)

FORMAT_VERSION = 1
_PREFACTORS = {1: "(q^3-q)", 2: "(q^3-q)^2"}
_PREFACTOR_POWERS = {text: power for power, text in _PREFACTORS.items()}

Entries = Tuple[Tuple[Tuple[int, ...], ...], ...]


def entries_checksum(entries: Sequence[Sequence[Sequence[int]]]) -> str:
    payload = json.dumps([[list(cell) for cell in row] for row in entries], separators=(",", ":"))
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()


@dataclass(frozen=True)
class FittedOperator:
    """Core matrix of a tube: full entry = (q^3-q)^prefactor_power * poly(entries[out][in])."""

    kind: TubeKind
    entries: Entries
    prefactor_power: int
    degree_bound: int
    primes: Tuple[int, ...] = field(default_factory=tuple)
    held_out: Tuple[int, ...] = field(default_factory=tuple)

    def quotient(self, output: CoreGenerator, source: CoreGenerator) -> LocalizedClass:
        row = CORE_ORDER.index(output)
        col = CORE_ORDER.index(source)
        return LocalizedClass.from_coefficients(self.entries[row][col])

    def entry(self, output: CoreGenerator, source: CoreGenerator) -> LocalizedClass:
        return P3**self.prefactor_power * self.quotient(output, source)

    @property
    def checksum(self) -> str:
        return entries_checksum(self.entries)

    def to_record(self) -> Dict[str, Any]:
        return {
            "kind": self.kind.value,
            "degree_bound": self.degree_bound,
            "primes": list(self.primes),
            "held_out": list(self.held_out),
            "prefactor": _PREFACTORS[self.prefactor_power],
            "entries": [[list(cell) for cell in row] for row in self.entries],
            "checksum": self.checksum,
        }

    @classmethod
    def from_record(cls, record: Dict[str, Any]) -> "FittedOperator":
        try:
            kind = TubeKind(record["kind"])
            power = _PREFACTOR_POWERS[record["prefactor"]]
            raw = record["entries"]
            entries = tuple(tuple(tuple(int(c) for c in cell) for cell in row) for row in raw)
        except (KeyError, TypeError, ValueError) as exc:
            raise OperatorDataCorrupt(f"malformed operator record: {exc}") from exc
        if len(entries) != len(CORE_ORDER) or any(len(row) != len(CORE_ORDER) for row in entries):
            raise OperatorDataCorrupt("core matrix must be 8x8", details={"kind": kind.value})
        expected = record.get("checksum")
        actual = entries_checksum(entries)
        if expected != actual:
            raise OperatorDataCorrupt(
                f"checksum mismatch for {kind.value}",
                details={"kind": kind.value, "expected": expected, "actual": actual},
            )
        return cls(
            kind=kind,
            entries=entries,
            prefactor_power=power,
            degree_bound=int(record.get("degree_bound", 0)),
            primes=tuple(int(p) for p in record.get("primes", [])),
            held_out=tuple(int(p) for p in record.get("held_out", [])),
        )


def read_operator_file(path: Path | str) -> Dict[TubeKind, FittedOperator]:
    target = Path(path)
    if not target.exists():
        raise MissingOperatorData(f"operator data file not found: {target}", details={"path": str(target)})
    try:
        document = json.loads(target.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise OperatorDataCorrupt(f"operator data file is not valid JSON: {exc}", details={"path": str(target)}) from exc
    if document.get("format") != FORMAT_VERSION:
        raise OperatorDataCorrupt(
            "unsupported operator data format",
            details={"path": str(target), "format": document.get("format")},
        )
    operators = {}
    for record in document.get("operators", []):
        fitted = FittedOperator.from_record(record)
        operators[fitted.kind] = fitted
    logger.debug("Loaded %d fitted operators from %s", len(operators), target)
    return operators


def write_operator_file(path: Path | str, operators: Iterable[FittedOperator]) -> Path:
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    ordered: List[FittedOperator] = sorted(operators, key=lambda op: list(TubeKind).index(op.kind))
    document = {"format": FORMAT_VERSION, "operators": [op.to_record() for op in ordered]}
    target.write_text(json.dumps(document, indent=2) + "\n", encoding="utf-8")
    logger.info("Wrote %d fitted operators to %s", len(ordered), target)
    return target
