"""Sparse elements of the module spanned by the core and skyscraper generators."""
from __future__ import annotations

from enum import Enum
from typing import Dict, Iterable, Iterator, List, Mapping, Tuple, Union

from eigen.orbits import TraceOrbit
from eigen.syntax import format_orbit
from eigen.values import Backend, require_backend
from kring.localized import ONE, ZERO, LocalizedClass


class CoreGenerator(str, Enum):
    T2 = "T2"
    TM2 = "Tm2"
    TP = "Tp"
    TM = "Tm"
    TTHETA = "TTheta"
    S2 = "S2"
    SM2 = "Sm2"
    S2SM2 = "S2Sm2"


CORE_ORDER: Tuple[CoreGenerator, ...] = tuple(CoreGenerator)
_CORE_RANK = {gen: index for index, gen in enumerate(CORE_ORDER)}

GeneratorKey = Union[CoreGenerator, TraceOrbit]
Scalar = Union[int, LocalizedClass]


def key_sort_key(key: GeneratorKey) -> tuple:
    if isinstance(key, CoreGenerator):
        return (0, _CORE_RANK[key])
    return (1, key.sort_key)


def key_label(key: GeneratorKey) -> str:
    if isinstance(key, CoreGenerator):
        return key.value
    return f"T[{format_orbit(key)}]"


def _as_class(value: Scalar) -> LocalizedClass:
    return value if isinstance(value, LocalizedClass) else LocalizedClass.from_int(int(value))


def _check_sky(keys: Iterable[GeneratorKey]) -> None:
    require_backend(key.representative for key in keys if isinstance(key, TraceOrbit))


class ModuleElement:
    """Immutable finite combination sum c_k * k with no zero coefficients stored."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[GeneratorKey, Scalar] | None = None) -> None:
        cleaned: Dict[GeneratorKey, LocalizedClass] = {}
        for key, value in (terms or {}).items():
            coeff = _as_class(value)
            if coeff:
                cleaned[key] = coeff
        _check_sky(cleaned)
        self._terms = cleaned

    @classmethod
    def basis(cls, key: GeneratorKey, coeff: Scalar = ONE) -> "ModuleElement":
        return cls({key: coeff})

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[GeneratorKey, Scalar]]) -> "ModuleElement":
        """Sum of c * key over ``pairs``; repeated keys merge."""
        acc: Dict[GeneratorKey, LocalizedClass] = {}
        for key, value in pairs:
            acc[key] = acc.get(key, ZERO) + _as_class(value)
        return cls(acc)

    def items(self) -> List[Tuple[GeneratorKey, LocalizedClass]]:
        return sorted(self._terms.items(), key=lambda item: key_sort_key(item[0]))

    def core_items(self) -> List[Tuple[CoreGenerator, LocalizedClass]]:
        return [(key, value) for key, value in self.items() if isinstance(key, CoreGenerator)]

    def sky_items(self) -> List[Tuple[TraceOrbit, LocalizedClass]]:
        return [(key, value) for key, value in self.items() if isinstance(key, TraceOrbit)]

    def keys(self) -> List[GeneratorKey]:
        return [key for key, _ in self.items()]

    @property
    def sky_backend(self) -> Backend | None:
        return require_backend(key.representative for key in self._terms if isinstance(key, TraceOrbit))

    def coefficient(self, key: GeneratorKey) -> LocalizedClass:
        return self._terms.get(key, ZERO)

    def add_scaled(self, coeff: Scalar, other: "ModuleElement") -> "ModuleElement":
        scale = _as_class(coeff)
        acc = dict(self._terms)
        if scale:
            for key, value in other._terms.items():
                acc[key] = acc.get(key, ZERO) + scale * value
        return ModuleElement(acc)

    def scale(self, coeff: Scalar) -> "ModuleElement":
        factor = _as_class(coeff)
        return ModuleElement({key: factor * value for key, value in self._terms.items()})

    def __add__(self, other: "ModuleElement") -> "ModuleElement":
        if not isinstance(other, ModuleElement):
            return NotImplemented
        return self.add_scaled(ONE, other)

    def __sub__(self, other: "ModuleElement") -> "ModuleElement":
        if not isinstance(other, ModuleElement):
            return NotImplemented
        return self.add_scaled(-ONE, other)

    def __neg__(self) -> "ModuleElement":
        return self.scale(-ONE)

    def __rmul__(self, coeff: Scalar) -> "ModuleElement":
        if not isinstance(coeff, (int, LocalizedClass)):
            return NotImplemented
        return self.scale(coeff)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ModuleElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(self.items()))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[GeneratorKey]:
        return iter(self.keys())

    def pretty(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for key, value in self.items():
            text = str(value)
            if text == "1":
                parts.append(key_label(key))
            elif " " in text or text.startswith("-"):
                parts.append(f"({text})*{key_label(key)}")
            else:
                parts.append(f"{text}*{key_label(key)}")
        return " + ".join(parts)

    def __str__(self) -> str:
        return self.pretty()

    def __repr__(self) -> str:
        return f"ModuleElement({self.pretty()!r})"


ZERO_ELEMENT = ModuleElement()


def elem_add_scaled(target: ModuleElement, coeff: Scalar, src: ModuleElement) -> ModuleElement:
    return target.add_scaled(coeff, src)


def coefficient_of(element: ModuleElement, key: GeneratorKey) -> LocalizedClass:
    return element.coefficient(key)


def sky(orbit: TraceOrbit, coeff: Scalar = ONE) -> ModuleElement:
    return ModuleElement.basis(orbit, coeff)


def core(gen: CoreGenerator, coeff: Scalar = ONE) -> ModuleElement:
    return ModuleElement.basis(gen, coeff)
