"""Linear endomorphisms given by core columns plus a skyscraper rule."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Dict, Mapping, Optional

from eigen.orbits import TraceOrbit
from kring.localized import ZERO, LocalizedClass
from monitor.metrics import record_tube_application
from wmodule.element import CORE_ORDER, CoreGenerator, ModuleElement

logger = logging.getLogger(__name__)

SkyRule = Callable[[TraceOrbit], ModuleElement]


class TubeKind(str, Enum):
    HANDLE = "Handle"
    JORDAN_PLUS = "JordanPlus"
    JORDAN_MINUS = "JordanMinus"
    SEMISIMPLE = "Semisimple"


def apply_columns(
    element: ModuleElement,
    columns: Mapping[CoreGenerator, ModuleElement],
    sky_rule: SkyRule,
) -> ModuleElement:
    acc: Dict = {}
    for key, coeff in element.items():
        image = columns.get(key) if isinstance(key, CoreGenerator) else sky_rule(key)
        if image is None:
            continue
        for out_key, value in image.items():
            acc[out_key] = acc.get(out_key, ZERO) + coeff * value
    return ModuleElement(acc)


@dataclass(frozen=True)
class TubeOperator:
    """A tube endomorphism; columns and sky rule already include the operator's prefactor."""

    kind: TubeKind
    reduced: bool
    columns: Mapping[CoreGenerator, ModuleElement]
    sky_rule: SkyRule = field(repr=False)
    orbit: Optional[TraceOrbit] = None
    pre: Optional[Callable[[ModuleElement], ModuleElement]] = field(default=None, repr=False)

    def apply(self, element: ModuleElement) -> ModuleElement:
        source = self.pre(element) if self.pre is not None else element
        result = apply_columns(source, self.columns, self.sky_rule)
        record_tube_application(self.kind.value)
        logger.debug("%s tube (reduced=%s): %d terms -> %d terms", self.kind.value, self.reduced, len(element), len(result))
        return result

    def __call__(self, element: ModuleElement) -> ModuleElement:
        return self.apply(element)

    def core_matrix(self) -> Dict[CoreGenerator, Dict[CoreGenerator, LocalizedClass]]:
        """matrix[input][output] restricted to core outputs."""
        matrix: Dict[CoreGenerator, Dict[CoreGenerator, LocalizedClass]] = {}
        for gen in CORE_ORDER:
            image = self.apply(ModuleElement.basis(gen))
            matrix[gen] = {out: image.coefficient(out) for out in CORE_ORDER}
        return matrix

    def core_to_sky(self) -> Dict[CoreGenerator, list]:
        """Per input column, the skyscraper outputs as (orbit, coefficient) pairs."""
        return {gen: self.apply(ModuleElement.basis(gen)).sky_items() for gen in CORE_ORDER}
