from __future__ import annotations

from kring.errors import EngineError


class ZeroEigenvalue(EngineError):
    """Raised when a rational eigenvalue of zero is requested."""

    code = "zero_eigenvalue"


class BadOrder(EngineError):
    """Raised when a root of unity is given an order below one."""

    code = "bad_order"


class GeneratorOutOfRange(EngineError):
    """Raised when a symbolic generator index exceeds the declared generator count."""

    code = "generator_out_of_range"


class BackendMismatch(EngineError):
    """Raised when eigenvalues from different backends meet in one computation."""

    code = "backend_mismatch"


class NegationUnrepresentable(EngineError):
    """Raised when -1 is not available in a closed odd-order root-of-unity group."""

    code = "negation_unrepresentable"


class NotAnOrbit(EngineError):
    """Raised when a trace orbit is requested for an eigenvalue equal to +1 or -1."""

    code = "not_an_orbit"


class EigenSyntaxError(EngineError):
    """Raised when an eigenvalue string cannot be parsed."""

    code = "eigen_syntax"
    exit_status = 2
