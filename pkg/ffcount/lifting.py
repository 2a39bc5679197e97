"""Residue traces lifted to eigenvalues, and the oracle comparison against computed classes.

A regular trace t mod p has its eigenvalues in F_{p^2}; fixing a generator of the cyclic group
F_{p^2}^x identifies them with powers zeta_{p^2-1}^k. That identification is an injective group
homomorphism, so products hit +1 or -1 exactly when they do over F_p.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Optional, Tuple

from sympy import factorint, isprime, legendre_symbol, sqrt_mod

from eigen.values import RootOfUnity
from engine_config import EngineConfig
from ffcount.budget import WorkBudget
from ffcount.errors import NotPrime, OracleMismatch, TraceNotLiftable
from ffcount.points import ResidueSurface, count_representation_points
from kring.localized import evaluate_at
from operators.datafile import FittedOperator
from operators.linear import TubeKind
from operators.surface import SurfaceSpec, assemble_representation_class

logger = logging.getLogger(__name__)

Fp2 = Tuple[int, int]


@dataclass(frozen=True)
class QuadraticExtension:
    """F_p[sqrt(n)] for the least quadratic non-residue n, with discrete logs to ``generator``."""

    p: int
    nonresidue: int
    generator: Fp2
    logs: Dict[Fp2, int]

    @property
    def order(self) -> int:
        return self.p * self.p - 1

    def power(self, k: int) -> Fp2:
        return _power(self.p, self.nonresidue, self.generator, k % self.order)


def _mul(p: int, n: int, x: Fp2, y: Fp2) -> Fp2:
    return (x[0] * y[0] + n * x[1] * y[1]) % p, (x[0] * y[1] + x[1] * y[0]) % p


def _power(p: int, n: int, x: Fp2, k: int) -> Fp2:
    result: Fp2 = (1, 0)
    while k:
        if k & 1:
            result = _mul(p, n, result, x)
        x = _mul(p, n, x, x)
        k >>= 1
    return result


@lru_cache(maxsize=16)
def quadratic_extension(p: int) -> QuadraticExtension:
    if p < 3 or not isprime(p):
        raise NotPrime(f"{p} is not an odd prime", details={"p": p})
    nonresidue = next(n for n in range(2, p) if legendre_symbol(n, p) == -1)
    order = p * p - 1
    cofactors = [order // prime for prime in factorint(order)]
    generator = next(
        (x, y)
        for x in range(p)
        for y in range(1, p)
        if all(_power(p, nonresidue, (x, y), k) != (1, 0) for k in cofactors)
    )
    logs: Dict[Fp2, int] = {}
    current: Fp2 = (1, 0)
    for k in range(order):
        logs[current] = k
        current = _mul(p, nonresidue, current, generator)
    logger.debug("F_%d^2 = F_%d[sqrt %d], generator %s", p, p, nonresidue, generator)
    return QuadraticExtension(p=p, nonresidue=nonresidue, generator=generator, logs=logs)


def eigenvalue_of_trace(p: int, t: int) -> Fp2:
    """A root of X^2 - tX + 1 in F_{p^2} for a regular trace t."""
    field = quadratic_extension(p)
    t %= p
    disc = (t * t - 4) % p
    if disc == 0:
        raise TraceNotLiftable(f"trace {t} is +-2 mod {p}", details={"p": p, "trace": t})
    half = pow(2, -1, p)
    if legendre_symbol(disc, p) == 1:
        root = sqrt_mod(disc, p)
        return ((t + root) * half) % p, 0
    root = sqrt_mod(disc * pow(field.nonresidue, -1, p) % p, p)
    return (t * half) % p, (root * half) % p


def lift_trace(p: int, t: int) -> RootOfUnity:
    field = quadratic_extension(p)
    return RootOfUnity(field.order, field.logs[eigenvalue_of_trace(p, t)])


def trace_of_eigenvalue(p: int, value: RootOfUnity) -> int:
    """Inverse of lift_trace on orbits: the residue lambda + lambda^-1."""
    field = quadratic_extension(p)
    if field.order % value.order:
        raise TraceNotLiftable(
            f"zeta_{value.order} is not in F_{p}^2",
            details={"p": p, "order": value.order},
        )
    k = value.exponent * (field.order // value.order)
    lam = field.power(k)
    inv = field.power(-k)
    return (lam[0] + inv[0]) % p


def lift_surface(p: int, surface: ResidueSurface) -> SurfaceSpec:
    return SurfaceSpec(
        genus=surface.genus,
        jordan_plus=surface.jordan_plus,
        jordan_minus=surface.jordan_minus,
        minus_id=surface.minus_id,
        semisimple=tuple(lift_trace(p, t) for t in surface.traces),
    )


def is_admissible(p: int, surface: ResidueSurface) -> bool:
    """True when the point count at p reproduces the complex class."""
    if (surface.jordan_minus or surface.minus_id) and p % 4 != 1:
        logger.debug("p=%d: [J-] or -Id punctures need p = 1 mod 4", p)
        return False
    twisted = (surface.jordan_minus + surface.minus_id) % 2 == 1
    for index, t in enumerate(surface.traces):
        lam = eigenvalue_of_trace(p, t)
        if lam[1]:
            logger.debug("p=%d: trace %d is not split", p, t)
            return False
        value = (-lam[0]) % p if twisted and index == 0 else lam[0]
        if legendre_symbol(value, p) != 1:
            logger.debug("p=%d: eigenvalue %d of trace %d is not a square", p, value, t)
            return False
    return True


@dataclass(frozen=True)
class OracleComparison:
    p: int
    surface: ResidueSurface
    count: int
    predicted: int
    admissible: bool

    @property
    def agree(self) -> bool:
        return self.count == self.predicted

    def to_dict(self) -> Dict[str, object]:
        return {
            "prime": self.p,
            "surface": self.surface.to_dict(),
            "count": self.count,
            "predicted": self.predicted,
            "admissible": self.admissible,
            "agree": self.agree,
        }


def compare_point_count(
    p: int,
    surface: ResidueSurface,
    *,
    data: Optional[Dict[TubeKind, FittedOperator]] = None,
    work_limit: Optional[int] = None,
    budget: Optional[WorkBudget] = None,
    strict: bool = False,
) -> OracleComparison:
    """Count points over F_p and evaluate the assembled class at q = p."""
    limit = work_limit if work_limit is not None else EngineConfig.from_env().work_limit
    count = count_representation_points(p, surface, work_limit=limit, budget=budget)
    spec = lift_surface(p, surface)
    predicted_value = evaluate_at(assemble_representation_class(spec, data=data), p)
    predicted = int(predicted_value)
    comparison = OracleComparison(p=p, surface=surface, count=count, predicted=predicted, admissible=is_admissible(p, surface))
    if not comparison.admissible:
        logger.warning("p=%d lies outside the polynomial-count regime for %s", p, surface.to_dict())
    elif not comparison.agree and strict:
        raise OracleMismatch(
            f"|Rep(F_{p})| = {count} but the class evaluates to {predicted}",
            details=comparison.to_dict(),
        )
    return comparison
