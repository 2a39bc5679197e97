from __future__ import annotations

from kring.errors import EngineError


class TooManyPunctures(EngineError):
    """Raised when the sign-tuple enumeration would exceed the configured puncture cap."""

    code = "too_many_punctures"
    exit_status = 2


class UnsupportedSurface(EngineError):
    """Raised when a closed form is asked for outside the genus or puncture range it covers."""

    code = "unsupported_surface"
    exit_status = 2


class ClosedFormMismatch(EngineError):
    """Raised when two independent routes to the same class disagree."""

    code = "closed_form_mismatch"
    exit_status = 3
