"""Module of core and skyscraper generators over the localized ring."""

from wmodule.codec import element_from_json, element_to_json
from wmodule.element import (
    CORE_ORDER,
    ZERO_ELEMENT,
    CoreGenerator,
    GeneratorKey,
    ModuleElement,
    coefficient_of,
    core,
    elem_add_scaled,
    key_label,
    sky,
)

__all__ = [
    "CORE_ORDER",
    "ZERO_ELEMENT",
    "CoreGenerator",
    "GeneratorKey",
    "ModuleElement",
    "coefficient_of",
    "core",
    "elem_add_scaled",
    "element_from_json",
    "element_to_json",
    "key_label",
    "sky",
]
