"""Exact arithmetic in the localized Grothendieck ring Z[q][1/q, 1/(q+1), 1/(q-1)]."""

from kring.errors import EngineError, NotAUnit, PoleAtX
from kring.localized import (
    ONE,
    P3,
    Q,
    ZERO,
    LocalizedClass,
    canonicalize,
    divide_exact,
    evaluate_at,
    ring_arith,
)
from kring.render import class_from_json, class_to_json, euler_characteristic

__all__ = [
    "EngineError",
    "NotAUnit",
    "PoleAtX",
    "LocalizedClass",
    "canonicalize",
    "ring_arith",
    "divide_exact",
    "evaluate_at",
    "class_to_json",
    "class_from_json",
    "euler_characteristic",
    "ZERO",
    "ONE",
    "Q",
    "P3",
]
