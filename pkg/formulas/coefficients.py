"""Closed form of the iterated semisimple tube applied to T_2."""
from __future__ import annotations

from typing import Dict, Optional, Sequence, Tuple

from eigen.orbits import orbit_of
from eigen.values import EigenClass, UnitKind, classify_unit, eigen_product
from formulas.alpha import AlphaCounts, alpha_counts, check_eigenvalues, half_sign_tuples
from kring.localized import ONE, P3, Q, ZERO, LocalizedClass
from wmodule.element import CoreGenerator as G
from wmodule.element import GeneratorKey, ModuleElement

_QP1 = Q + ONE
_QM1 = Q - ONE


def generic_coefficients(s: int) -> Tuple[LocalizedClass, LocalizedClass, LocalizedClass, LocalizedClass]:
    """(a_s, b_s, c_s, d_s) for s >= 1."""
    if s < 1:
        raise ValueError("generic coefficients need s >= 1")
    half = 2 ** (s - 1)
    qs = Q**s
    up = _QP1**s
    sq = _QP1 * _QP1
    a = qs * up + Q * Q * up - half * qs * sq
    b = qs * up * _QP1 * _QM1 - half * qs * sq * _QM1
    c = qs * Q * Q * up + Q * Q * up - half * qs * Q * sq
    d = qs * Q * up + Q**3 * up - half * qs * Q * sq
    return a, b, c, d


def interaction_term(eigs: Sequence[EigenClass], *, alpha: Optional[AlphaCounts] = None) -> ModuleElement:
    counts = alpha or alpha_counts(eigs)
    s = len(eigs)
    if s == 0 or (counts.alpha_plus == 0 and counts.alpha_minus == 0):
        return ModuleElement()
    scale = Q ** (s - 1) * P3**s * _QP1
    return ModuleElement(
        {
            G.T2: counts.alpha_plus * scale,
            G.TP: counts.alpha_plus * scale * _QM1,
            G.TM2: counts.alpha_minus * scale,
            G.TM: counts.alpha_minus * scale * _QM1,
        }
    )


def iterated_tube_closed_form(eigs: Sequence[EigenClass]) -> ModuleElement:
    """The reduced semisimple tubes of eigs applied to T_2, in closed form."""
    check_eigenvalues(eigs)
    s = len(eigs)
    if s == 0:
        return ModuleElement.basis(G.T2)
    a, b, c, d = generic_coefficients(s)
    lead = P3 ** (s - 1)
    terms: Dict[GeneratorKey, LocalizedClass] = {
        G.T2: lead * a,
        G.TM2: lead * a,
        G.TP: lead * b,
        G.TM: lead * b,
        G.TTHETA: lead * c,
        G.S2SM2: lead * d,
    }
    sky_scale = P3**s * _QP1 * Q**s
    for signs in half_sign_tuples(s):
        product = eigen_product(eigs, signs)
        if classify_unit(product) is not UnitKind.GENERIC:
            continue
        key = orbit_of(product)
        terms[key] = terms.get(key, ZERO) + sky_scale
    return ModuleElement(terms) + interaction_term(eigs)
