"""Text and JSON renderings of command results."""
from __future__ import annotations

import json
from typing import Any, Dict, Iterable, List, Mapping

import pandas as pd

from kring.localized import LocalizedClass
from kring.render import class_to_json, euler_characteristic
from wmodule.element import CoreGenerator, GeneratorKey, ModuleElement, key_label, key_sort_key


def dump_json(payload: Any) -> str:
    return json.dumps(payload, indent=2, default=str)


def class_payload(value: LocalizedClass) -> Dict[str, Any]:
    """Pretty form, JSON form, E-polynomial coefficients and Euler characteristic of a class."""
    payload: Dict[str, Any] = {"class": str(value), "json": class_to_json(value)}
    if value.is_polynomial:
        payload["coefficients"] = value.coefficients()
        payload["euler_characteristic"] = euler_characteristic(value)
    return payload


def class_text(label: str, payload: Mapping[str, Any]) -> List[str]:
    lines = [f"{label} = {payload['class']}", f"json: {json.dumps(payload['json'])}"]
    if "coefficients" in payload:
        lines.append(f"coefficients (q^0 first): {payload['coefficients']}")
        lines.append(f"euler characteristic: {payload['euler_characteristic']}")
    return lines


def tube_frame(columns: Mapping[CoreGenerator, ModuleElement]) -> pd.DataFrame:
    """Rows are output generators, columns the core inputs; cells are pretty classes."""
    keys: set[GeneratorKey] = set()
    for image in columns.values():
        keys.update(key for key, _ in image.items())
    rows = sorted(keys, key=key_sort_key)
    data = {
        source.value: [str(image.coefficient(key)) for key in rows]
        for source, image in columns.items()
    }
    return pd.DataFrame(data, index=[key_label(key) for key in rows])


def checks_frame(checks: Iterable[Mapping[str, Any]]) -> pd.DataFrame:
    frame = pd.DataFrame(list(checks), columns=["name", "passed", "detail"])
    frame["passed"] = frame["passed"].map({True: "ok", False: "FAILED"})
    return frame


def frame_text(frame: pd.DataFrame, *, index: bool = True) -> str:
    with pd.option_context("display.max_colwidth", None, "display.width", None):
        return frame.to_string(index=index)
