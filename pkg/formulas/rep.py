"""Closed forms for the virtual class of the parabolic representation variety."""
from __future__ import annotations

import logging
from typing import Optional, Sequence

from eigen.values import EigenClass
from formulas.alpha import AlphaCounts, alpha_counts
from formulas.errors import UnsupportedSurface
from kring.localized import ONE, Q, LocalizedClass, divide_exact
from operators.errors import NotPolynomial
from operators.surface import SurfaceSpec

logger = logging.getLogger(__name__)

_QP1 = Q + ONE
_QM1 = Q - ONE


def _require_polynomial(value: LocalizedClass, label: str) -> LocalizedClass:
    if not value.is_polynomial:
        raise NotPolynomial(f"{label} keeps a denominator: {value}", details={"class": str(value)})
    return value


def rep_interaction(g: int, r: int, s: int, alpha: AlphaCounts) -> LocalizedClass:
    """q^{2g+s-1} (q-1)^{2g+r} (q+1) alpha_plus."""
    return alpha.alpha_plus * Q ** (2 * g + s - 1) * _QM1 ** (2 * g + r) * _QP1


def rep_class_closed(g: int, r: int, eigs: Sequence[EigenClass], *, alpha: Optional[AlphaCounts] = None) -> LocalizedClass:
    """[Rep(Sigma_g, Q)] for r punctures of type [J+] and s >= 1 semisimple punctures."""
    s = len(eigs)
    if s < 1 or g < 0 or r < 0:
        raise UnsupportedSurface(
            "the Rep closed form needs s >= 1 and g, r >= 0",
            details={"g": g, "r": r, "s": s},
        )
    counts = alpha or alpha_counts(eigs)
    twos = 2 ** (2 * g + s - 1) - 2**s
    if r > 0:
        base = Q ** (2 * g + s - 1) * _QM1 ** (2 * g + r - 1) * _QP1 * (twos + _QP1 ** (2 * g + r + s - 2))
    else:
        lift = _QP1 ** (2 * g + s - 2)
        base = Q ** (2 * g + s - 1) * _QM1 ** (2 * g - 1) * _QP1 * (twos + lift + Q ** (2 - 2 * g - s) * lift)
    value = base + rep_interaction(g, r, s, counts)
    return _require_polynomial(value, f"[Rep] at g={g}, r={r}, s={s}")


def rep_class_jordan_only(g: int, r: int) -> LocalizedClass:
    """[Rep(Sigma_g, Q)] with r >= 1 punctures of type [J+] and nothing else."""
    if r < 1 or g < 0:
        raise UnsupportedSurface("the Jordan-only closed form needs r >= 1", details={"g": g, "r": r})
    square = Q * Q - ONE
    front = Q ** (2 * g - 1)
    twos = 2 ** (2 * g)
    halves = _QM1 ** (2 * g + r - 1) * front * _QP1 * (twos + Q - 3)
    halves = halves + (-1) ** r * _QP1 ** (2 * g + r - 1) * front * _QM1 * (twos + Q - ONE)
    value = square ** (2 * g + r - 1) * front + divide_exact(halves, LocalizedClass.from_int(2))
    return _require_polynomial(value, f"[Rep] at g={g}, r={r}, s=0")


def rep_class_for_surface(spec: SurfaceSpec) -> LocalizedClass:
    """Closed form for any surface the formulas cover, after holonomy reduction."""
    reduced = spec.reduce_holonomy()
    if reduced.s:
        return rep_class_closed(reduced.genus, reduced.jordan_plus, reduced.semisimple)
    if reduced.jordan_plus:
        return rep_class_jordan_only(reduced.genus, reduced.jordan_plus)
    raise UnsupportedSurface("no closed form for a surface without punctures", details=spec.to_dict())
