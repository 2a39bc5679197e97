"""Character-variety classes: closed display and the assembly from the reducible strata."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence, Tuple

from eigen.values import EigenClass
from formulas.alpha import AlphaCounts, alpha_counts
from formulas.errors import ClosedFormMismatch, UnsupportedSurface
from formulas.rep import rep_class_closed
from kring.localized import ONE, P3, Q, LocalizedClass, divide_exact
from operators.errors import NotPolynomial
from operators.surface import SurfaceSpec

logger = logging.getLogger(__name__)

_QP1 = Q + ONE
_QM1 = Q - ONE


class CharRoute(str, Enum):
    DISPLAY = "display"
    STRATA = "strata"


@dataclass(frozen=True)
class ReducibleStrata:
    completely_reducible: LocalizedClass
    not_completely_reducible: LocalizedClass

    @property
    def total(self) -> LocalizedClass:
        return self.completely_reducible + self.not_completely_reducible


def reducible_and_diag_classes(
    g: int,
    eigs: Sequence[EigenClass],
    *,
    alpha: Optional[AlphaCounts] = None,
) -> Tuple[LocalizedClass, LocalizedClass]:
    """(reducible locus, diagonal locus modulo Z/2)."""
    counts = alpha or alpha_counts(eigs)
    s = len(eigs)
    torus = counts.alpha_plus * _QM1 ** (2 * g)
    reducible = torus * _QP1 * (2 * Q ** (2 * g + s - 1) - Q)
    return reducible, torus


def reducible_strata(g: int, eigs: Sequence[EigenClass], *, alpha: Optional[AlphaCounts] = None) -> ReducibleStrata:
    """Split the reducible locus into its completely reducible and its extension part."""
    counts = alpha or alpha_counts(eigs)
    s = len(eigs)
    torus = counts.alpha_plus * _QM1 ** (2 * g)
    complete = torus * (Q * Q + Q)
    extensions = 2 * torus * divide_exact(P3, _QM1 * Q) * (Q ** (2 * g + s - 1) - Q)
    return ReducibleStrata(complete, extensions)


def _reduced(spec: SurfaceSpec) -> SurfaceSpec:
    if spec.s == 0:
        raise UnsupportedSurface("character-variety closed forms need a semisimple puncture", details=spec.to_dict())
    if spec.genus < 1:
        raise UnsupportedSurface("character-variety closed forms need genus >= 1", details=spec.to_dict())
    return spec.reduce_holonomy()


def _strata_route(g: int, eigs: Sequence[EigenClass], alpha: AlphaCounts) -> LocalizedClass:
    rep = rep_class_closed(g, 0, eigs, alpha=alpha)
    reducible, diagonal = reducible_and_diag_classes(g, eigs, alpha=alpha)
    return diagonal + divide_exact(rep - reducible, P3)


def _display_route(g: int, s: int, alpha: AlphaCounts) -> LocalizedClass:
    irreducible = Q ** (2 * g + s - 2) * _QM1 ** (2 * g - 2) * (2 ** (2 * g + s - 1) - 2**s + _QP1 ** (2 * g + s - 2))
    irreducible = irreducible + (Q * Q - ONE) ** (2 * g - 2) * _QP1**s
    return irreducible + alpha.alpha_plus * _QM1 ** (2 * g - 1) * (Q - Q ** (2 * g + s - 2))


def char_class_closed(spec: SurfaceSpec, *, route: CharRoute | str = CharRoute.DISPLAY) -> LocalizedClass:
    """[Char(Sigma_g, Q)] for g >= 1 and s >= 1."""
    reduced = _reduced(spec)
    g, r, eigs = reduced.genus, reduced.jordan_plus, reduced.semisimple
    counts = alpha_counts(eigs)
    if r > 0:
        # the PGL(2) action on the irreducible locus is free
        value = divide_exact(rep_class_closed(g, r, eigs, alpha=counts), P3)
    elif CharRoute(route) is CharRoute.STRATA:
        value = _strata_route(g, eigs, counts)
    else:
        value = _display_route(g, len(eigs), counts)
    if not value.is_polynomial:
        raise NotPolynomial(f"[Char] keeps a denominator: {value}", details={"surface": spec.to_dict()})
    return value


def check_char_routes(spec: SurfaceSpec) -> LocalizedClass:
    """Both routes for r = 0 (a single route otherwise); ClosedFormMismatch when they disagree."""
    display = char_class_closed(spec, route=CharRoute.DISPLAY)
    strata = char_class_closed(spec, route=CharRoute.STRATA)
    if display != strata:
        raise ClosedFormMismatch(
            "character-variety display and strata assembly disagree",
            details={"surface": spec.to_dict(), "display": str(display), "strata": str(strata)},
        )
    logger.debug("Char routes agree for %s", spec.to_dict())
    return display
