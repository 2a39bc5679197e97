"""Handle and Jordan tube operators.

Core columns come from the fitted data file; skyscraper columns are the closed images
  L_[J+](T_t) = (q^3-q)^2 (T_+ + T_- + T_Theta + T_t),
  L_[J-](T_t) = (q^3-q)^2 (T_+ + T_- + T_Theta + T_-t),
  L(T_t)      = (q^3-q)^2 ((q^2+4q+1)(T_2+T_-2) + ... + (q^3-q^2) T_t).
"""
from __future__ import annotations

import logging
from pathlib import Path
from threading import Lock
from typing import Dict, Optional, Tuple

from eigen.orbits import TraceOrbit, orbit_of
from eigen.values import eigen_neg
from engine_config import EngineConfig
from kring.localized import ONE, P3, Q
from operators.datafile import FittedOperator, read_operator_file
from operators.errors import MissingOperatorData
from operators.eta import eta_inverse_apply
from operators.linear import TubeKind, TubeOperator
from wmodule.element import CORE_ORDER, CoreGenerator as G
from wmodule.element import ModuleElement

logger = logging.getLogger(__name__)

_SKY_PREFACTOR = P3 * P3
_CACHE: Dict[Tuple[str, float], Dict[TubeKind, FittedOperator]] = {}
_CACHE_LOCK = Lock()


def load_operator_data(path: Path | str | None = None) -> Dict[TubeKind, FittedOperator]:
    """Read (and memoize per file modification time) the fitted operator file."""
    target = Path(path) if path is not None else EngineConfig.from_env().data_file
    stamp = target.stat().st_mtime if target.exists() else -1.0
    key = (str(target.resolve()), stamp)
    with _CACHE_LOCK:
        if key not in _CACHE:
            _CACHE[key] = read_operator_file(target)
        return _CACHE[key]


def _fitted(kind: TubeKind, data: Optional[Dict[TubeKind, FittedOperator]]) -> FittedOperator:
    table = data if data is not None else load_operator_data()
    fitted = table.get(kind)
    if fitted is None:
        raise MissingOperatorData(f"no fitted core matrix for {kind.value}", details={"kind": kind.value})
    return fitted


def _columns(fitted: FittedOperator) -> Dict[G, ModuleElement]:
    return {
        source: ModuleElement({output: fitted.entry(output, source) for output in CORE_ORDER})
        for source in CORE_ORDER
    }


def jordan_sky_image(sign: int, orbit: TraceOrbit) -> ModuleElement:
    target = orbit if sign > 0 else orbit_of(eigen_neg(orbit.representative))
    return ModuleElement.from_pairs(
        [(G.TP, _SKY_PREFACTOR), (G.TM, _SKY_PREFACTOR), (G.TTHETA, _SKY_PREFACTOR), (target, _SKY_PREFACTOR)]
    )


def handle_sky_image(orbit: TraceOrbit) -> ModuleElement:
    qq = Q * Q
    torus = qq + 4 * Q + ONE
    jordan = (qq + 2 * Q + 3) * (Q - ONE) * Q
    terms = {
        G.T2: torus,
        G.TM2: torus,
        G.TP: jordan,
        G.TM: jordan,
        G.TTHETA: qq * qq + qq * Q - qq + Q + ONE,
        G.S2: 3 * qq,
        G.SM2: 3 * qq,
        G.S2SM2: qq * Q + qq + Q,
        orbit: qq * Q - qq,
    }
    return ModuleElement({key: _SKY_PREFACTOR * value for key, value in terms.items()})


def handle_tube(*, reduced: bool = True, data: Optional[Dict[TubeKind, FittedOperator]] = None) -> TubeOperator:
    fitted = _fitted(TubeKind.HANDLE, data)
    return TubeOperator(
        kind=TubeKind.HANDLE,
        reduced=reduced,
        columns=_columns(fitted),
        sky_rule=handle_sky_image,
        pre=eta_inverse_apply if reduced else None,
    )


def jordan_tube(
    sign: int,
    *,
    reduced: bool = True,
    data: Optional[Dict[TubeKind, FittedOperator]] = None,
) -> TubeOperator:
    kind = TubeKind.JORDAN_PLUS if sign > 0 else TubeKind.JORDAN_MINUS
    fitted = _fitted(kind, data)
    return TubeOperator(
        kind=kind,
        reduced=reduced,
        columns=_columns(fitted),
        sky_rule=lambda orbit: jordan_sky_image(sign, orbit),
        pre=eta_inverse_apply if reduced else None,
    )


def handle_tube_apply(
    element: ModuleElement,
    *,
    reduced: bool = True,
    data: Optional[Dict[TubeKind, FittedOperator]] = None,
) -> ModuleElement:
    return handle_tube(reduced=reduced, data=data).apply(element)


def jordan_tube_apply(
    sign: int,
    element: ModuleElement,
    *,
    reduced: bool = True,
    data: Optional[Dict[TubeKind, FittedOperator]] = None,
) -> ModuleElement:
    return jordan_tube(sign, reduced=reduced, data=data).apply(element)
