"""Fiber counts of the tube spans over F_p, decomposed into stratum and character profiles.

The coefficient of an output core generator is the number of span tuples landing in that
stratum, including the free factor |G|. Over Theta the per-trace counts are written as
A + B chi(t-2) + C chi(t+2) + D chi(t^2-4) with (A, B, C, D) the coefficients of
(T_Theta, S_2, S_-2, S_2 x S_-2); what is left at single traces is the skyscraper part.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple, Union

import numpy as np
from sympy import Matrix

from ffcount.budget import WorkBudget
from ffcount.errors import ProfileSystemSingular, ResidualNonzero
from ffcount.group import (
    STRATUM_J_MINUS,
    STRATUM_J_PLUS,
    STRATUM_THETA,
    THETA_OFFSET,
    GroupData,
    group_data,
    legendre_table,
    regular_trace,
)
from operators.linear import TubeKind
from wmodule.element import CoreGenerator as G

logger = logging.getLogger(__name__)

InputWeight = Union[G, int]

_PATTERNS: Tuple[Tuple[int, int], ...] = ((1, 1), (1, -1), (-1, 1), (-1, -1))
_THETA_OUTPUTS = (G.TTHETA, G.S2, G.SM2, G.S2SM2)


@dataclass(frozen=True)
class FiberProfile:
    """Counts for one (kind, input weight) pair at one prime."""

    p: int
    kind: TubeKind
    source: InputWeight
    trace0: Optional[int] = None
    core: Dict[G, int] = field(default_factory=dict)
    sky: Dict[int, int] = field(default_factory=dict)

    def coefficient(self, output: G) -> int:
        return self.core.get(output, 0)


def input_weights(group: GroupData, source: InputWeight) -> Dict[int, int]:
    """Per-element weight of each conjugacy class for a core generator or a single regular trace."""
    chi = group.chi
    p = group.p
    if not isinstance(source, G):
        return {THETA_OFFSET + regular_trace(group, source): 1}
    strata = {G.T2: 0, G.TM2: 1, G.TP: STRATUM_J_PLUS, G.TM: STRATUM_J_MINUS}
    if source in strata:
        return {k: 1 for k in group.classes_in_stratum(strata[source])}
    weights: Dict[int, int] = {}
    for t in group.theta_traces():
        k = THETA_OFFSET + t
        if k not in group.representatives:
            continue
        if source is G.TTHETA:
            w = 1
        elif source is G.S2:
            w = int(chi[(t - 2) % p])
        elif source is G.SM2:
            w = int(chi[(t + 2) % p])
        else:
            w = int(chi[(t * t - 4) % p])
        if w:
            weights[k] = w
    return weights


def _partner_mask(group: GroupData, kind: TubeKind, trace0: Optional[int]) -> np.ndarray:
    strata = group.strata
    if kind is TubeKind.JORDAN_PLUS:
        return strata == STRATUM_J_PLUS
    if kind is TubeKind.JORDAN_MINUS:
        return strata == STRATUM_J_MINUS
    return strata == STRATUM_THETA + int(trace0)  # type: ignore[arg-type]


def stratum_counts(
    group: GroupData,
    kind: TubeKind,
    source: InputWeight,
    *,
    trace0: Optional[int] = None,
    budget: Optional[WorkBudget] = None,
) -> List[int]:
    """Unscaled tuple counts per output stratum (no free factor)."""
    weights = input_weights(group, source)
    totals = [0] * group.n_strata
    element_strata = group.strata
    if kind is TubeKind.HANDLE:
        partners = None
        n_comm = group.commutator_counts
    else:
        mask = _partner_mask(group, kind, trace0)
        partners = (group.a[mask], group.b[mask], group.c[mask], group.d[mask])
    if budget is not None:
        width = group.order if partners is None else int(partners[0].shape[0])
        budget.charge(len(weights) * width, label=f"{kind.value} profile p={group.p}")
    for k, w in weights.items():
        g = group.representative(k)
        scale = w * int(group.class_sizes[k])
        if partners is None:
            p = group.p
            a, b, c, d = g
            products = group.left_times_all((d, (-b) % p, (-c) % p, a))
            values = n_comm[group.classify(*products)]
            per_stratum = np.zeros(group.n_strata, dtype=np.int64)
            np.add.at(per_stratum, element_strata, values)
        else:
            products = group.left_times_all(g, partners)
            out = group.class_stratum[group.classify(*products)]
            per_stratum = np.bincount(out, minlength=group.n_strata)
        for index, value in enumerate(per_stratum.tolist()):
            if value:
                totals[index] += scale * value
    return totals


def _quadratic_roots(p: int, linear: int, constant: int) -> FrozenSet[int]:
    xs = np.arange(p, dtype=np.int64)
    values = (xs * xs - linear * xs + constant) % p
    return frozenset(int(x) for x in xs[values == 0])


def sky_traces(p: int, kind: TubeKind, source: InputWeight, trace0: Optional[int] = None) -> FrozenSet[int]:
    """Traces where a skyscraper term may sit, hence excluded from the profile fit."""
    if isinstance(source, G):
        if kind is TubeKind.SEMISIMPLE:
            return frozenset({int(trace0) % p, (-int(trace0)) % p})  # type: ignore[arg-type]
        return frozenset()
    t = int(source) % p
    if kind is TubeKind.SEMISIMPLE:
        # traces of lambda0 * lambda^{+-1}: roots of X^2 - t0 t X + (t0^2 + t^2 - 4)
        t0 = int(trace0) % p  # type: ignore[arg-type]
        return _quadratic_roots(p, t0 * t % p, (t0 * t0 + t * t - 4) % p)
    return frozenset({t, (-t) % p})


def pattern_samples(p: int, chi: np.ndarray, excluded: FrozenSet[int]) -> Dict[Tuple[int, int], int]:
    """First regular trace outside ``excluded`` for each (chi(t-2), chi(t+2)) pattern that occurs."""
    samples: Dict[Tuple[int, int], int] = {}
    for t in range(p):
        if t in (2, p - 2) or t in excluded:
            continue
        samples.setdefault((int(chi[(t - 2) % p]), int(chi[(t + 2) % p])), t)
    return samples


def samples_every_pattern(p: int, excluded: Iterable[int]) -> bool:
    """True when the Theta profile system stays solvable with ``excluded`` traces held back.

    A pattern class is closed under t -> -t when p = 1 mod 4, so a sky trace pair can swallow
    a whole class; mod 13 the pattern (1, 1) only occurs at t = 1 and t = 12.
    """
    held = frozenset(int(t) % p for t in excluded)
    return len(pattern_samples(p, legendre_table(p), held)) == len(_PATTERNS)


def decompose_theta(
    group: GroupData,
    values: Dict[int, int],
    excluded: FrozenSet[int],
) -> Tuple[Dict[G, int], Dict[int, int]]:
    """Split Theta counts into the four character profiles plus single-trace residuals."""
    chi = group.chi
    p = group.p
    samples = pattern_samples(p, chi, excluded)
    missing = [pattern for pattern in _PATTERNS if pattern not in samples]
    if missing:
        raise ProfileSystemSingular(
            f"no sample trace mod {p} for character patterns {missing}",
            details={"p": p, "missing": missing, "excluded": sorted(excluded)},
        )
    rows = [[1, e1, e2, e1 * e2] for e1, e2 in _PATTERNS]
    rhs = [values.get(samples[pattern], 0) for pattern in _PATTERNS]
    logger.debug("p=%d profile sample traces %s", p, [samples[pattern] for pattern in _PATTERNS])
    solution = Matrix(rows).LUsolve(Matrix(rhs))
    coefficients = dict(zip(_THETA_OUTPUTS, solution))
    residuals: Dict[int, int] = {}
    for t in group.theta_traces():
        e1, e2 = int(chi[(t - 2) % p]), int(chi[(t + 2) % p])
        model = solution[0] + solution[1] * e1 + solution[2] * e2 + solution[3] * e1 * e2
        residual = values.get(t, 0) - model
        if residual == 0:
            continue
        if t not in excluded:
            raise ResidualNonzero(
                f"Theta counts mod {p} leave residual {residual} at trace {t}",
                details={"p": p, "trace": t, "residual": str(residual)},
            )
        residuals[t] = residual
    core: Dict[G, int] = {}
    for gen, value in coefficients.items():
        if not value.is_integer:
            raise ResidualNonzero(
                f"profile coefficient {value} for {gen.value} is not integral mod {p}",
                details={"p": p, "generator": gen.value, "value": str(value)},
            )
        if value:
            core[gen] = int(value)
    sky = {t: int(r) for t, r in residuals.items() if r.is_integer}
    if len(sky) != len(residuals):
        raise ResidualNonzero(f"non-integral skyscraper residual mod {p}", details={"p": p})
    return core, sky


def fiber_profile_counts(
    p: int,
    kind: TubeKind,
    source: InputWeight,
    *,
    trace0: Optional[int] = None,
    max_prime: Optional[int] = None,
    budget: Optional[WorkBudget] = None,
) -> FiberProfile:
    group = group_data(p, max_prime=max_prime)
    if kind is TubeKind.SEMISIMPLE:
        if trace0 is None:
            raise ValueError("a semisimple tube needs trace0")
        trace0 = regular_trace(group, trace0)
    totals = [group.order * value for value in stratum_counts(group, kind, source, trace0=trace0, budget=budget)]
    core = {gen: totals[index] for index, gen in enumerate((G.T2, G.TM2, G.TP, G.TM)) if totals[index]}
    theta = {t: totals[STRATUM_THETA + t] for t in group.theta_traces()}
    theta_core, sky = decompose_theta(group, theta, sky_traces(p, kind, source, trace0))
    core.update(theta_core)
    logger.info("Profile p=%d %s <- %s: %d core terms, %d sky traces", p, kind.value, source, len(core), len(sky))
    return FiberProfile(p=p, kind=kind, source=source, trace0=trace0, core=core, sky=sky)
