"""Error hierarchy shared by every package of the engine."""
from __future__ import annotations

from typing import Any, Dict, Optional


class EngineError(RuntimeError):
    """Base class for engine failures; carries a stable machine-readable code."""

    code = "engine_error"
    exit_status = 1

    def __init__(self, message: str, *, details: Optional[Dict[str, Any]] = None) -> None:
        super().__init__(message)
        self.details: Dict[str, Any] = dict(details or {})

    def to_dict(self) -> Dict[str, Any]:
        return {"code": self.code, "message": str(self), "details": self.details}


class NotAUnit(EngineError):
    """Raised when a division leaves the localized ring."""

    code = "not_a_unit"


class PoleAtX(EngineError):
    """Raised when evaluation hits a denominator factor."""

    code = "pole_at_x"
