"""The reduction endomorphism eta = tr_! tr^* and its inverse on the localized module."""
from __future__ import annotations

from typing import Dict

from eigen.orbits import TraceOrbit
from kring.localized import ONE, Q, LocalizedClass
from operators.linear import apply_columns
from wmodule.element import CoreGenerator as G
from wmodule.element import ModuleElement

_QQ = Q * Q
_SKY_SCALE = _QQ + Q
_JORDAN_SCALE = _QQ - ONE
_BLOCK_DET = _QQ * _QQ - _QQ


def _pair(first: G, a: LocalizedClass, second: G, b: LocalizedClass) -> ModuleElement:
    return ModuleElement({first: a, second: b})


ETA_COLUMNS: Dict[G, ModuleElement] = {
    G.T2: ModuleElement.basis(G.T2),
    G.TM2: ModuleElement.basis(G.TM2),
    G.TP: ModuleElement.basis(G.TP, _JORDAN_SCALE),
    G.TM: ModuleElement.basis(G.TM, _JORDAN_SCALE),
    G.TTHETA: _pair(G.TTHETA, _QQ, G.S2SM2, Q),
    G.S2SM2: _pair(G.TTHETA, Q, G.S2SM2, _QQ),
    G.S2: _pair(G.S2, _QQ, G.SM2, Q),
    G.SM2: _pair(G.S2, Q, G.SM2, _QQ),
}

ETA_INVERSE_COLUMNS: Dict[G, ModuleElement] = {
    G.T2: ModuleElement.basis(G.T2),
    G.TM2: ModuleElement.basis(G.TM2),
    G.TP: ModuleElement.basis(G.TP, ONE / _JORDAN_SCALE),
    G.TM: ModuleElement.basis(G.TM, ONE / _JORDAN_SCALE),
    G.TTHETA: _pair(G.TTHETA, _QQ / _BLOCK_DET, G.S2SM2, -Q / _BLOCK_DET),
    G.S2SM2: _pair(G.TTHETA, -Q / _BLOCK_DET, G.S2SM2, _QQ / _BLOCK_DET),
    G.S2: _pair(G.S2, _QQ / _BLOCK_DET, G.SM2, -Q / _BLOCK_DET),
    G.SM2: _pair(G.S2, -Q / _BLOCK_DET, G.SM2, _QQ / _BLOCK_DET),
}


def _eta_sky(orbit: TraceOrbit) -> ModuleElement:
    return ModuleElement.basis(orbit, _SKY_SCALE)


def _eta_inverse_sky(orbit: TraceOrbit) -> ModuleElement:
    return ModuleElement.basis(orbit, ONE / _SKY_SCALE)


def eta_apply(element: ModuleElement) -> ModuleElement:
    return apply_columns(element, ETA_COLUMNS, _eta_sky)


def eta_inverse_apply(element: ModuleElement) -> ModuleElement:
    return apply_columns(element, ETA_INVERSE_COLUMNS, _eta_inverse_sky)
