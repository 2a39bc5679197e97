"""Parabolic surfaces and the assembly of their representation-variety classes."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace
from typing import Any, Dict, Optional, Tuple

from eigen.syntax import format_eigen
from eigen.values import EigenClass, UnitKind, classify_unit, eigen_neg, require_backend
from kring.localized import P3, LocalizedClass
from operators.datafile import FittedOperator
from operators.errors import InvalidSurface, NotPolynomial, OutOfScopeTwisted
from operators.linear import TubeKind, TubeOperator
from operators.semisimple import semisimple_tube
from operators.tubes import handle_tube, jordan_tube
from wmodule.element import CoreGenerator, ModuleElement

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SurfaceSpec:
    """Genus plus puncture counts for [J+], [J-], {-Id} and the semisimple eigenvalues."""

    genus: int
    jordan_plus: int = 0
    jordan_minus: int = 0
    minus_id: int = 0
    semisimple: Tuple[EigenClass, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        object.__setattr__(self, "semisimple", tuple(self.semisimple))
        for name in ("genus", "jordan_plus", "jordan_minus", "minus_id"):
            if int(getattr(self, name)) < 0:
                raise InvalidSurface(f"{name} must be non-negative", details={name: getattr(self, name)})
        require_backend(self.semisimple)
        for value in self.semisimple:
            kind = classify_unit(value)
            if kind is not UnitKind.GENERIC:
                raise InvalidSurface(
                    f"semisimple eigenvalue {format_eigen(value)} is {kind.value}",
                    details={"eigenvalue": format_eigen(value)},
                )

    @property
    def s(self) -> int:
        return len(self.semisimple)

    @property
    def r(self) -> int:
        return self.jordan_plus + self.jordan_minus

    @property
    def sigma(self) -> int:
        return -1 if (self.jordan_minus + self.minus_id) % 2 else 1

    def reduce_holonomy(self) -> "SurfaceSpec":
        """Fold [J-] into [J+] and drop {-Id}; for sigma = -1 negate the first eigenvalue."""
        if self.sigma < 0 and self.s == 0:
            raise OutOfScopeTwisted(
                "sigma = -1 without semisimple punctures is not covered",
                details=self.to_dict(),
            )
        eigs = self.semisimple
        if self.sigma < 0:
            eigs = (eigen_neg(eigs[0]),) + eigs[1:]
        return SurfaceSpec(genus=self.genus, jordan_plus=self.r, semisimple=eigs)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "genus": self.genus,
            "jordan_plus": self.jordan_plus,
            "jordan_minus": self.jordan_minus,
            "minus_id": self.minus_id,
            "semisimple": [format_eigen(value) for value in self.semisimple],
        }

    def with_semisimple(self, eigs: Tuple[EigenClass, ...]) -> "SurfaceSpec":
        return replace(self, semisimple=tuple(eigs))


def iterated_semisimple(eigs: Tuple[EigenClass, ...], start: Optional[ModuleElement] = None) -> ModuleElement:
    """Apply the reduced semisimple tubes for eigs[0], eigs[1], ... to T_2."""
    element = start if start is not None else ModuleElement.basis(CoreGenerator.T2)
    for value in eigs:
        element = semisimple_tube(value, reduced=True).apply(element)
    return element


def _tube_sequence(
    spec: SurfaceSpec,
    data: Optional[Dict[TubeKind, FittedOperator]],
    direct_minus: bool,
) -> list[TubeOperator]:
    tubes: list[TubeOperator] = [semisimple_tube(value, reduced=True) for value in spec.semisimple]
    if spec.jordan_plus:
        plus = jordan_tube(+1, data=data)
        tubes.extend([plus] * spec.jordan_plus)
    if direct_minus and spec.jordan_minus:
        minus = jordan_tube(-1, data=data)
        tubes.extend([minus] * spec.jordan_minus)
    if spec.genus:
        handle = handle_tube(data=data)
        tubes.extend([handle] * spec.genus)
    return tubes


def assemble_representation_class(
    spec: SurfaceSpec,
    *,
    reduce_holonomy: bool = True,
    data: Optional[Dict[TubeKind, FittedOperator]] = None,
) -> LocalizedClass:
    """[Rep(Sigma_g, Q)] = T_2-coefficient of the reduced tubes applied to T_2, over (q^3-q)^N.

    Every tube contributes exactly one factor of |G| = q^3 - q, so N is the number of
    tubes. Handle entries carry (q^3-q)^2 and Jordan entries a single (q^3-q); the
    Jordan tube is not divisible by (q^3-q)^2 and only one power is taken out per tube.
    """
    if spec.sigma < 0 and spec.s == 0:
        raise OutOfScopeTwisted("sigma = -1 without semisimple punctures is not covered", details=spec.to_dict())
    direct = not reduce_holonomy and spec.minus_id == 0
    working = spec if direct else spec.reduce_holonomy()
    if not reduce_holonomy and not direct:
        logger.debug("{-Id} punctures present; falling back to holonomy reduction")
    tubes = _tube_sequence(working, data, direct_minus=direct)
    element = ModuleElement.basis(CoreGenerator.T2)
    for tube in tubes:
        element = tube.apply(element)
    top = element.coefficient(CoreGenerator.T2)
    result = top / P3 ** len(tubes)
    if not result.is_polynomial:
        raise NotPolynomial(
            f"assembled class {result} keeps a denominator",
            details={"surface": spec.to_dict(), "class": str(result)},
        )
    logger.info("Assembled [Rep] for %s with %d tubes", spec.to_dict(), len(tubes))
    return result
