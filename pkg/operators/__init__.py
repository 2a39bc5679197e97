"""TQFT tube operators on the localized module and the surface assembly built from them."""

from operators.datafile import FittedOperator, read_operator_file, write_operator_file
from operators.errors import (
    InvalidSurface,
    MissingOperatorData,
    NotPolynomial,
    OperatorDataCorrupt,
    OutOfScopeTwisted,
)
from operators.eta import eta_apply, eta_inverse_apply
from operators.linear import TubeKind, TubeOperator, apply_columns
from operators.semisimple import delta, semisimple_tube, semisimple_tube_apply
from operators.surface import SurfaceSpec, assemble_representation_class, iterated_semisimple
from operators.tubes import (
    handle_sky_image,
    handle_tube,
    handle_tube_apply,
    jordan_sky_image,
    jordan_tube,
    jordan_tube_apply,
    load_operator_data,
)

__all__ = [
    "FittedOperator",
    "InvalidSurface",
    "MissingOperatorData",
    "NotPolynomial",
    "OperatorDataCorrupt",
    "OutOfScopeTwisted",
    "SurfaceSpec",
    "TubeKind",
    "TubeOperator",
    "apply_columns",
    "assemble_representation_class",
    "delta",
    "eta_apply",
    "eta_inverse_apply",
    "handle_sky_image",
    "handle_tube",
    "handle_tube_apply",
    "iterated_semisimple",
    "jordan_sky_image",
    "jordan_tube",
    "jordan_tube_apply",
    "load_operator_data",
    "read_operator_file",
    "semisimple_tube",
    "semisimple_tube_apply",
    "write_operator_file",
]
