"""Exact |Rep(Sigma_g, Q)(F_p)| by propagating class functions of the partial product."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Tuple

import numpy as np

from engine_config import EngineConfig
from ffcount.budget import WorkBudget
from ffcount.group import (
    ID,
    MINUS_ID,
    STRATUM_J_MINUS,
    STRATUM_J_PLUS,
    THETA_OFFSET,
    GroupData,
    group_data,
    regular_trace,
)
from monitor.metrics import record_oracle_count
from operators.errors import InvalidSurface

logger = logging.getLogger(__name__)

_COMMUTATOR = "commutator"


@dataclass(frozen=True)
class ResidueSurface:
    """A parabolic surface whose semisimple punctures are given by residue traces."""

    genus: int
    jordan_plus: int = 0
    jordan_minus: int = 0
    minus_id: int = 0
    traces: Tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        object.__setattr__(self, "traces", tuple(int(t) for t in self.traces))
        for name in ("genus", "jordan_plus", "jordan_minus", "minus_id"):
            if int(getattr(self, name)) < 0:
                raise InvalidSurface(f"{name} must be non-negative", details={name: getattr(self, name)})

    @property
    def punctures(self) -> int:
        return self.jordan_plus + self.jordan_minus + self.minus_id + len(self.traces)

    def to_dict(self) -> Dict[str, object]:
        return {
            "genus": self.genus,
            "jordan_plus": self.jordan_plus,
            "jordan_minus": self.jordan_minus,
            "minus_id": self.minus_id,
            "traces": list(self.traces),
        }


def puncture_classes(group: GroupData, surface: ResidueSurface) -> List[FrozenSet[int]]:
    """Conjugacy classes allowed at each puncture, in a fixed order."""
    sets: List[FrozenSet[int]] = []
    sets += [group.classes_in_stratum(STRATUM_J_PLUS)] * surface.jordan_plus
    sets += [group.classes_in_stratum(STRATUM_J_MINUS)] * surface.jordan_minus
    sets += [frozenset({MINUS_ID})] * surface.minus_id
    sets += [frozenset({THETA_OFFSET + regular_trace(group, t)}) for t in surface.traces]
    return sets


def estimate_work(group: GroupData, surface: ResidueSurface) -> int:
    return len(group.classes) * group.order * (surface.genus + surface.punctures + 1)


def transfer_matrix(group: GroupData, step: object) -> List[List[int]]:
    """M[c][z]: ways to move from a fixed element of class c to a fixed element z of each class.

    ``step`` is either the commutator step or a frozenset of allowed puncture classes.
    """
    key = ("transfer", step)
    cached = group._cache.get(key)
    if cached is None:
        cached = np.zeros((group.n_slots, group.n_slots), dtype=np.int64)
        inverses = group.inverses()
        for z in group.classes:
            landed = group.classify(*group.all_times_right(inverses, group.representative(z)))
            if step == _COMMUTATOR:
                values = group.commutator_counts[landed]
            else:
                values = np.isin(landed, sorted(step)).astype(np.int64)  # type: ignore[arg-type]
            column = np.zeros(group.n_slots, dtype=np.int64)
            np.add.at(column, group.class_ids, values)
            cached[:, z] = column
        group._cache[key] = cached
    return cached.tolist()


def _propagate(group: GroupData, h: List[int], matrix: List[List[int]]) -> List[int]:
    classes = group.classes
    return [sum(h[c] * matrix[c][z] for c in classes if h[c]) if z in group.representatives else 0 for z in range(group.n_slots)]


def count_representation_points(
    p: int,
    surface: ResidueSurface,
    *,
    work_limit: Optional[int] = None,
    max_prime: Optional[int] = None,
    budget: Optional[WorkBudget] = None,
) -> int:
    """Number of (A_1, B_1, ..., A_g, B_g, C_1, ..., C_s) with prod [A_i, B_i] prod C_k = Id."""
    group = group_data(p, max_prime=max_prime)
    sets = puncture_classes(group, surface)
    steps = estimate_work(group, surface)
    ledger = budget if budget is not None else WorkBudget(work_limit if work_limit is not None else EngineConfig.from_env().work_limit)
    ledger.charge(steps, label=f"point count p={p}")

    h = [0] * group.n_slots
    h[ID] = 1
    if surface.genus:
        commutator = transfer_matrix(group, _COMMUTATOR)
        for _ in range(surface.genus):
            h = _propagate(group, h, commutator)
    for allowed in sets[:-1]:
        h = _propagate(group, h, transfer_matrix(group, allowed))
    if not sets:
        total = h[ID]
    else:
        # C_s is forced to be the inverse of the partial product
        last = sets[-1]
        inverse = group.inverse_class
        total = sum(h[c] * int(group.class_sizes[c]) for c in group.classes if int(inverse[c]) in last)
    logger.info("p=%d %s: %d points", p, surface.to_dict(), total)
    record_oracle_count(p, total)
    return total
