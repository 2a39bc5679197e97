"""Eigenvalue backends: exact rationals, roots of unity and formal symbolic monomials.

Every computation uses a single backend. Equality of products with +1 and -1 is decidable in each of
them, which is all the character-variety formulas need.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Sequence, Tuple, Union

from eigen.errors import (
    BackendMismatch,
    BadOrder,
    GeneratorOutOfRange,
    NegationUnrepresentable,
    ZeroEigenvalue,
)


class Backend(str, Enum):
    RATIONAL = "rat"
    ROOT_OF_UNITY = "zeta"
    SYMBOLIC = "sym"


class UnitKind(str, Enum):
    IS_ONE = "IsOne"
    IS_MINUS_ONE = "IsMinusOne"
    GENERIC = "Generic"


@dataclass(frozen=True)
class Rational:
    value: Fraction

    def __post_init__(self) -> None:
        value = Fraction(self.value)
        if value == 0:
            raise ZeroEigenvalue("rational eigenvalue must be nonzero")
        object.__setattr__(self, "value", value)

    @property
    def backend(self) -> Backend:
        return Backend.RATIONAL


@dataclass(frozen=True, eq=False)
class RootOfUnity:
    """zeta_n^k for the compatible system zeta_n = exp(2 pi i / n)."""

    order: int
    exponent: int

    def __post_init__(self) -> None:
        if int(self.order) < 1:
            raise BadOrder(f"root of unity order must be >= 1, got {self.order}", details={"order": self.order})
        object.__setattr__(self, "order", int(self.order))
        object.__setattr__(self, "exponent", int(self.exponent) % int(self.order))

    @property
    def backend(self) -> Backend:
        return Backend.ROOT_OF_UNITY

    @property
    def angle(self) -> Fraction:
        """Position on the circle as a fraction of a full turn, in [0, 1)."""
        return Fraction(self.exponent, self.order)

    def reduced(self) -> "RootOfUnity":
        common = gcd(self.exponent, self.order)
        return RootOfUnity(self.order // common, self.exponent // common)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RootOfUnity):
            return NotImplemented
        return self.angle == other.angle

    def __hash__(self) -> int:
        return hash(("zeta", self.angle))


@dataclass(frozen=True)
class Symbolic:
    """sign * x_1^e_1 ... x_m^e_m over formal, multiplicatively independent generators."""

    sign: int
    exponents: Tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError(f"symbolic sign must be +1 or -1, got {self.sign}")
        object.__setattr__(self, "exponents", tuple(int(e) for e in self.exponents))

    @property
    def backend(self) -> Backend:
        return Backend.SYMBOLIC

    @property
    def generator_count(self) -> int:
        return len(self.exponents)


EigenClass = Union[Rational, RootOfUnity, Symbolic]


def eigen_construct(
    backend: Backend | str,
    payload: object,
    *,
    generators: int | None = None,
) -> EigenClass:
    """Build an eigenvalue from a backend tag and its payload.

    rat: a Fraction, int, "p/q" string or (num, den) pair. zeta: (order, exponent).
    sym: (sign, {index: exponent}) with 1-based indices, or (sign, exponent tuple).
    """
    tag = Backend(backend)
    if tag is Backend.RATIONAL:
        if isinstance(payload, tuple):
            num, den = payload
            if int(den) == 0:
                raise ZeroEigenvalue("rational eigenvalue has a zero denominator")
            return Rational(Fraction(int(num), int(den)))
        return Rational(Fraction(payload))  # type: ignore[arg-type]
    if tag is Backend.ROOT_OF_UNITY:
        order, exponent = payload  # type: ignore[misc]
        return RootOfUnity(int(order), int(exponent))
    sign, exps = payload  # type: ignore[misc]
    if isinstance(exps, Mapping):
        top = max(exps, default=0)
        count = generators if generators is not None else top
        if any(index < 1 or index > count for index in exps):
            raise GeneratorOutOfRange(
                f"generator index outside 1..{count}",
                details={"indices": sorted(exps), "generators": count},
            )
        vector = [0] * count
        for index, exp in exps.items():
            vector[index - 1] += int(exp)
        return Symbolic(int(sign), tuple(vector))
    vector = tuple(int(e) for e in exps)
    if generators is not None and len(vector) > generators:
        raise GeneratorOutOfRange(
            f"exponent vector longer than {generators} generators",
            details={"length": len(vector), "generators": generators},
        )
    if generators is not None:
        vector = vector + (0,) * (generators - len(vector))
    return Symbolic(int(sign), vector)


def require_backend(values: Iterable[EigenClass]) -> Backend | None:
    """Common backend of ``values`` (None when empty); BackendMismatch otherwise."""
    found: Backend | None = None
    width: int | None = None
    for value in values:
        if found is None:
            found = value.backend
        elif value.backend is not found:
            raise BackendMismatch(
                f"cannot mix {found.value} and {value.backend.value} eigenvalues",
                details={"backends": [found.value, value.backend.value]},
            )
        if isinstance(value, Symbolic):
            if width is None:
                width = value.generator_count
            elif value.generator_count != width:
                raise BackendMismatch(
                    "symbolic eigenvalues declare different generator counts",
                    details={"generators": [width, value.generator_count]},
                )
    return found


def eigen_mul(a: EigenClass, b: EigenClass) -> EigenClass:
    require_backend((a, b))
    if isinstance(a, Rational):
        return Rational(a.value * b.value)  # type: ignore[union-attr]
    if isinstance(a, RootOfUnity):
        assert isinstance(b, RootOfUnity)
        order = a.order * b.order // gcd(a.order, b.order)
        exponent = a.exponent * (order // a.order) + b.exponent * (order // b.order)
        return RootOfUnity(order, exponent)
    assert isinstance(b, Symbolic)
    return Symbolic(a.sign * b.sign, tuple(x + y for x, y in zip(a.exponents, b.exponents)))


def eigen_inv(a: EigenClass) -> EigenClass:
    if isinstance(a, Rational):
        return Rational(1 / a.value)
    if isinstance(a, RootOfUnity):
        return RootOfUnity(a.order, -a.exponent)
    return Symbolic(a.sign, tuple(-e for e in a.exponents))


def eigen_neg(a: EigenClass, *, promote: bool = False) -> EigenClass:
    """Return -a.

    -1 is not a power of an odd-order root of unity, so that case raises NegationUnrepresentable.
    ``promote=True`` passes to order 2n instead, for callers that only need the trace -t.
    """
    if isinstance(a, Rational):
        return Rational(-a.value)
    if isinstance(a, RootOfUnity):
        if a.order % 2 == 0:
            return RootOfUnity(a.order, a.exponent + a.order // 2)
        if not promote:
            raise NegationUnrepresentable(
                f"-1 is not a power of zeta_{a.order}",
                details={"order": a.order, "exponent": a.exponent},
            )
        return RootOfUnity(2 * a.order, 2 * a.exponent + a.order)
    return Symbolic(-a.sign, a.exponents)


def eigen_product(values: Sequence[EigenClass], signs: Sequence[int]) -> EigenClass:
    """prod values[i]^signs[i] for signs in {+1, -1}."""
    result: EigenClass | None = None
    for value, sign in zip(values, signs):
        term = value if sign > 0 else eigen_inv(value)
        result = term if result is None else eigen_mul(result, term)
    if result is None:
        raise ValueError("empty eigenvalue product")
    return result


def classify_unit(a: EigenClass) -> UnitKind:
    if isinstance(a, Rational):
        if a.value == 1:
            return UnitKind.IS_ONE
        if a.value == -1:
            return UnitKind.IS_MINUS_ONE
        return UnitKind.GENERIC
    if isinstance(a, RootOfUnity):
        if a.angle == 0:
            return UnitKind.IS_ONE
        if a.angle == Fraction(1, 2):
            return UnitKind.IS_MINUS_ONE
        return UnitKind.GENERIC
    if any(a.exponents):
        return UnitKind.GENERIC
    return UnitKind.IS_ONE if a.sign == 1 else UnitKind.IS_MINUS_ONE


def eigen_sort_key(a: EigenClass) -> tuple:
    if isinstance(a, Rational):
        return (a.backend.value, a.value.denominator, abs(a.value.numerator), a.value.numerator)
    if isinstance(a, RootOfUnity):
        return (a.backend.value, a.angle)
    return (a.backend.value, a.exponents, a.sign)
