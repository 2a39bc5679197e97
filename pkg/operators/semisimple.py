"""Tube operator for a puncture with semisimple holonomy of trace t0 = lambda0 + 1/lambda0.

The reduced columns are stored as the explicit matrix of the reduced theory with prefactor (q^3 - q);
the unreduced columns carry (q^2 + q)(q^3 - q). Skyscraper inputs follow one rule for every orbit,
which also produces the columns T_{t0}, T_{-t0} and the trace-zero case.
"""
from __future__ import annotations

from typing import Dict

from eigen.orbits import TraceOrbit, orbit_of
from eigen.values import EigenClass, UnitKind, classify_unit, eigen_inv, eigen_mul, eigen_neg
from kring.localized import ONE, P3, Q
from operators.linear import TubeKind, TubeOperator
from wmodule.element import CoreGenerator as G
from wmodule.element import ModuleElement

_QM1 = Q - ONE
_SKY_SCALE = Q * Q + Q
UNREDUCED_PREFACTOR = _SKY_SCALE * P3
REDUCED_PREFACTOR = P3


def delta(mu: EigenClass) -> ModuleElement:
    """Skyscraper image of a product eigenvalue: q*T_mu, or the trace +-2 strata it collapses onto."""
    kind = classify_unit(mu)
    if kind is UnitKind.IS_ONE:
        return ModuleElement({G.T2: ONE, G.TP: _QM1})
    if kind is UnitKind.IS_MINUS_ONE:
        return ModuleElement({G.TM2: ONE, G.TM: _QM1})
    return ModuleElement.basis(orbit_of(mu), Q)


def reduced_columns(lambda0: EigenClass) -> Dict[G, ModuleElement]:
    t0 = orbit_of(lambda0)
    mt0 = orbit_of(eigen_neg(lambda0, promote=True))  # -t0 is a trace here, not a negated holonomy
    qq = Q * Q
    both_sky = [(t0, -Q), (mt0, -Q)]
    table = {
        G.T2: [(t0, qq + Q)],
        G.TM2: [(mt0, qq + Q)],
        G.TP: [(G.TP, Q), (G.TM, Q), (G.TTHETA, Q), (t0, Q)],
        G.TM: [(G.TP, Q), (G.TM, Q), (G.TTHETA, Q), (mt0, Q)],
        G.TTHETA: [
            (G.T2, ONE), (G.TM2, ONE), (G.TP, qq - Q), (G.TM, qq - Q),
            (G.TTHETA, qq - Q + 1), (G.S2SM2, Q), *both_sky,
        ],
        G.S2: [(G.T2, ONE), (G.TM2, ONE), (G.TTHETA, 1 - Q), (G.S2, Q), (G.SM2, Q), *both_sky],
        G.SM2: [(G.T2, ONE), (G.TM2, ONE), (G.TTHETA, 1 - Q), (G.S2, Q), (G.SM2, Q), *both_sky],
        G.S2SM2: [
            (G.T2, ONE), (G.TM2, ONE), (G.TP, 1 - Q), (G.TM, 1 - Q),
            (G.TTHETA, 2 - Q), (G.S2SM2, Q), *both_sky,
        ],
    }
    return {gen: ModuleElement.from_pairs((key, P3 * value) for key, value in pairs) for gen, pairs in table.items()}


def unreduced_columns(lambda0: EigenClass) -> Dict[G, ModuleElement]:
    t0 = orbit_of(lambda0)
    mt0 = orbit_of(eigen_neg(lambda0, promote=True))  # -t0 is a trace here, not a negated holonomy
    qq = Q * Q
    jordan_block = [(G.TP, _QM1), (G.TM, _QM1), (G.TTHETA, _QM1)]
    both_sky = [(t0, -Q), (mt0, -Q)]
    table = {
        G.T2: [(t0, ONE)],
        G.TM2: [(mt0, ONE)],
        G.TP: [*jordan_block, (t0, _QM1)],
        G.TM: [*jordan_block, (mt0, _QM1)],
        G.TTHETA: [
            (G.T2, ONE), (G.TM2, ONE), (G.TP, _QM1 * _QM1), (G.TM, _QM1 * _QM1),
            (G.TTHETA, qq - 2 * Q + 2), (G.S2SM2, Q), *both_sky,
        ],
        G.S2: [(G.T2, ONE), (G.TM2, ONE), (G.TTHETA, 1 - Q), (G.S2, Q), (G.SM2, Q), *both_sky],
        G.SM2: [(G.T2, ONE), (G.TM2, ONE), (G.TTHETA, 1 - Q), (G.S2, Q), (G.SM2, Q), *both_sky],
        G.S2SM2: [(G.T2, ONE), (G.TM2, ONE), (G.TTHETA, ONE), (G.S2SM2, Q), *both_sky],
    }
    return {
        gen: ModuleElement.from_pairs((key, UNREDUCED_PREFACTOR * value) for key, value in pairs)
        for gen, pairs in table.items()
    }


def sky_image(lambda0: EigenClass, orbit: TraceOrbit, *, reduced: bool) -> ModuleElement:
    lam = orbit.representative
    bracket = ModuleElement({G.TP: _QM1, G.TM: _QM1, G.TTHETA: _QM1})
    bracket = bracket + delta(eigen_mul(lambda0, lam)) + delta(eigen_mul(lambda0, eigen_inv(lam)))
    return bracket.scale(REDUCED_PREFACTOR if reduced else UNREDUCED_PREFACTOR)


def semisimple_tube(lambda0: EigenClass, *, reduced: bool = True) -> TubeOperator:
    orbit = orbit_of(lambda0)
    columns = reduced_columns(lambda0) if reduced else unreduced_columns(lambda0)
    return TubeOperator(
        kind=TubeKind.SEMISIMPLE,
        reduced=reduced,
        columns=columns,
        sky_rule=lambda target: sky_image(lambda0, target, reduced=reduced),
        orbit=orbit,
    )


def semisimple_tube_apply(t0: TraceOrbit | EigenClass, element: ModuleElement, reduced: bool = True) -> ModuleElement:
    lambda0 = t0.representative if isinstance(t0, TraceOrbit) else t0
    return semisimple_tube(lambda0, reduced=reduced).apply(element)
