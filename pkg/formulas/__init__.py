"""Closed-form evaluators for the Rep and Char virtual classes."""

from formulas.alpha import AlphaCounts, alpha_counts
from formulas.char import (
    CharRoute,
    ReducibleStrata,
    char_class_closed,
    check_char_routes,
    reducible_and_diag_classes,
    reducible_strata,
)
from formulas.coefficients import generic_coefficients, interaction_term, iterated_tube_closed_form
from formulas.errors import ClosedFormMismatch, TooManyPunctures, UnsupportedSurface
from formulas.rep import rep_class_closed, rep_class_for_surface, rep_class_jordan_only, rep_interaction

__all__ = [
    "AlphaCounts",
    "CharRoute",
    "ClosedFormMismatch",
    "ReducibleStrata",
    "TooManyPunctures",
    "UnsupportedSurface",
    "alpha_counts",
    "char_class_closed",
    "check_char_routes",
    "generic_coefficients",
    "interaction_term",
    "iterated_tube_closed_form",
    "reducible_and_diag_classes",
    "reducible_strata",
    "rep_class_closed",
    "rep_class_for_surface",
    "rep_class_jordan_only",
    "rep_interaction",
]
