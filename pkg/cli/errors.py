from __future__ import annotations

from kring.errors import EngineError


class UsageError(EngineError):
    """Raised for malformed flags, job files or job fields."""

    code = "usage_error"
    exit_status = 2


class VerificationFailed(EngineError):
    """Raised when at least one acceptance check of the verify command fails."""

    code = "verification_failed"
    exit_status = 3
