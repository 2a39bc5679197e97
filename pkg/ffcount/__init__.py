"""Point counting in SL(2, F_p): the finite-field oracle for the virtual classes."""

from ffcount.budget import WorkBudget
from ffcount.errors import (
    NotPrime,
    OracleMismatch,
    PrimeTooLarge,
    ProfileSystemSingular,
    ResidualNonzero,
    TraceNotLiftable,
    WorkLimitExceeded,
)
from ffcount.group import ClassProfile, GroupData, ProfileTag, group_data, regular_trace
from ffcount.lifting import (
    OracleComparison,
    compare_point_count,
    eigenvalue_of_trace,
    is_admissible,
    lift_surface,
    lift_trace,
    quadratic_extension,
    trace_of_eigenvalue,
)
from ffcount.points import ResidueSurface, count_representation_points, estimate_work
from ffcount.profiles import FiberProfile, fiber_profile_counts, input_weights, sky_traces

__all__ = [
    "ClassProfile",
    "FiberProfile",
    "GroupData",
    "NotPrime",
    "OracleComparison",
    "OracleMismatch",
    "PrimeTooLarge",
    "ProfileSystemSingular",
    "ProfileTag",
    "ResidualNonzero",
    "ResidueSurface",
    "TraceNotLiftable",
    "WorkBudget",
    "WorkLimitExceeded",
    "compare_point_count",
    "count_representation_points",
    "eigenvalue_of_trace",
    "estimate_work",
    "fiber_profile_counts",
    "group_data",
    "input_weights",
    "is_admissible",
    "lift_surface",
    "lift_trace",
    "quadratic_extension",
    "regular_trace",
    "sky_traces",
    "trace_of_eigenvalue",
]
