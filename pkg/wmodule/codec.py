from __future__ import annotations

from typing import Any, Dict

from eigen.orbits import orbit_of
from eigen.syntax import format_orbit, parse_eigen
from kring.render import ClassDecodeError, class_from_json, class_to_json
from wmodule.element import CoreGenerator, ModuleElement


def element_to_json(element: ModuleElement) -> Dict[str, Any]:
    return {
        "core": {gen.value: class_to_json(value) for gen, value in element.core_items()},
        "sky": [{"orbit": format_orbit(orbit), "coeff": class_to_json(value)} for orbit, value in element.sky_items()],
    }


def element_from_json(payload: Dict[str, Any], *, generators: int | None = None) -> ModuleElement:
    pairs = []
    for name, value in payload.get("core", {}).items():
        try:
            gen = CoreGenerator(name)
        except ValueError as exc:
            raise ClassDecodeError(f"unknown core generator {name!r}") from exc
        pairs.append((gen, class_from_json(value)))
    for entry in payload.get("sky", []):
        orbit = orbit_of(parse_eigen(entry["orbit"], generators=generators))
        pairs.append((orbit, class_from_json(entry["coeff"])))
    return ModuleElement.from_pairs(pairs)
