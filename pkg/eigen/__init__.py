"""Eigenvalue groups and the trace-orbit indexing of skyscraper generators."""

from eigen.errors import (
    BackendMismatch,
    BadOrder,
    EigenSyntaxError,
    GeneratorOutOfRange,
    NegationUnrepresentable,
    NotAnOrbit,
    ZeroEigenvalue,
)
from eigen.orbits import TraceOrbit, orbit_eq, orbit_of
from eigen.syntax import format_eigen, format_orbit, parse_eigen, parse_eigen_list, symbolic_generator_count
from eigen.values import (
    Backend,
    EigenClass,
    Rational,
    RootOfUnity,
    Symbolic,
    UnitKind,
    classify_unit,
    eigen_construct,
    eigen_inv,
    eigen_mul,
    eigen_neg,
    eigen_product,
    require_backend,
)

__all__ = [
    "Backend",
    "BackendMismatch",
    "BadOrder",
    "EigenClass",
    "EigenSyntaxError",
    "GeneratorOutOfRange",
    "NegationUnrepresentable",
    "NotAnOrbit",
    "Rational",
    "RootOfUnity",
    "Symbolic",
    "TraceOrbit",
    "UnitKind",
    "ZeroEigenvalue",
    "classify_unit",
    "eigen_construct",
    "eigen_inv",
    "eigen_mul",
    "eigen_neg",
    "eigen_product",
    "format_eigen",
    "format_orbit",
    "orbit_eq",
    "orbit_of",
    "parse_eigen",
    "parse_eigen_list",
    "require_backend",
    "symbolic_generator_count",
]
