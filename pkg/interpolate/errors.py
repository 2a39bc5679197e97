from __future__ import annotations

from kring.errors import EngineError


class NonIntegralFit(EngineError):
    """Raised when interpolated matrix entries leave Z[q] or exceed the degree bound."""

    code = "non_integral_fit"


class ValidationFailed(EngineError):
    """Raised when a fitted matrix disagrees with a held-out prime or a closed skyscraper column."""

    code = "validation_failed"
