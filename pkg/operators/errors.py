from __future__ import annotations

from kring.errors import EngineError


class MissingOperatorData(EngineError):
    """Raised when no fitted core matrix is available for a tube kind."""

    code = "missing_operator_data"


class OperatorDataCorrupt(EngineError):
    """Raised when an operator data file fails its checksum or shape checks."""

    code = "operator_data_corrupt"


class OutOfScopeTwisted(EngineError):
    """Raised for twisted parabolic structures without semisimple punctures."""

    code = "out_of_scope_twisted"
    exit_status = 2


class NotPolynomial(EngineError):
    """Raised when an assembled virtual class keeps a denominator."""

    code = "not_polynomial"


class InvalidSurface(EngineError):
    """Raised for negative counts or a semisimple eigenvalue equal to +1 or -1."""

    code = "invalid_surface"
    exit_status = 2
