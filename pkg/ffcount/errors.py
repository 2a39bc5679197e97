from __future__ import annotations

from kring.errors import EngineError


class NotPrime(EngineError):
    """Raised when a finite-field computation is asked for a non-prime modulus."""

    code = "not_prime"
    exit_status = 2


class PrimeTooLarge(EngineError):
    """Raised when a prime exceeds the enumeration guardrail."""

    code = "prime_too_large"
    exit_status = 2


class WorkLimitExceeded(EngineError):
    """Raised when the estimated number of elementary steps exceeds the work limit."""

    code = "work_limit_exceeded"


class ProfileSystemSingular(EngineError):
    """Raised when the sampled traces miss one of the quadratic-character patterns."""

    code = "profile_system_singular"


class ResidualNonzero(EngineError):
    """Raised when Theta counts do not decompose into the four character profiles."""

    code = "residual_nonzero"


class TraceNotLiftable(EngineError):
    """Raised when a residue trace has no semisimple eigenvalue lift (trace +-2 or out of range)."""

    code = "trace_not_liftable"
    exit_status = 2


class OracleMismatch(EngineError):
    """Raised when a point count inside the polynomial-count regime disagrees with the class."""

    code = "oracle_mismatch"
    exit_status = 3
