"""Exact reconstruction of the Handle and Jordan core matrices from finite-field counts."""

from interpolate.errors import NonIntegralFit, ValidationFailed
from interpolate.fit import (
    FIT_SHAPES,
    FitShape,
    PrimeTable,
    SemisimpleValidation,
    collect_prime_table,
    collect_tables,
    fit_core_matrix,
    fit_polynomial,
    refit_operators,
    split_primes,
    validate_semisimple_tube,
)

__all__ = [
    "FIT_SHAPES",
    "FitShape",
    "NonIntegralFit",
    "PrimeTable",
    "SemisimpleValidation",
    "ValidationFailed",
    "collect_prime_table",
    "collect_tables",
    "fit_core_matrix",
    "fit_polynomial",
    "refit_operators",
    "split_primes",
    "validate_semisimple_tube",
]
