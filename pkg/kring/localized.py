"""Exact arithmetic in Z[q] localized at the multiplicative set generated by q, q+1 and q-1.

A class is stored as a numerator in ZZ[q] together with the exponents of q, (q+1) and (q-1) in the
denominator. The representative is canonical: no denominator factor with a positive exponent divides
the numerator, and zero always carries the empty denominator.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple, Union

from sympy.polys.domains import ZZ
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import PolyElement, ring

from kring.errors import NotAUnit, PoleAtX

POLY_RING, _q = ring("q", ZZ)
_FACTORS: Tuple[PolyElement, PolyElement, PolyElement] = (_q, _q + 1, _q - 1)
_FACTOR_LABELS = ("q", "(q+1)", "(q-1)")

Exponents = Tuple[int, int, int]
Coercible = Union[int, "LocalizedClass"]


def _strip_factor(num: PolyElement, factor: PolyElement, limit: int | None = None) -> Tuple[PolyElement, int]:
    count = 0
    while num and (limit is None or count < limit):
        quotient, remainder = num.div(factor)
        if remainder:
            break
        num = quotient
        count += 1
    return num, count


def canonicalize(numerator: PolyElement | int, den: Sequence[int] = (0, 0, 0)) -> "LocalizedClass":
    """Return the canonical representative of numerator / (q^a (q+1)^b (q-1)^c).

    Negative exponents are accepted and moved into the numerator.
    """
    num = numerator if isinstance(numerator, PolyElement) else POLY_RING(int(numerator))
    exponents = [int(value) for value in den]
    if len(exponents) != 3:
        raise ValueError("denominator needs exactly three exponents")
    if not num:
        return LocalizedClass(POLY_RING.zero, (0, 0, 0))
    for index, factor in enumerate(_FACTORS):
        if exponents[index] < 0:
            num = num * factor ** (-exponents[index])
            exponents[index] = 0
        elif exponents[index] > 0:
            num, removed = _strip_factor(num, factor, exponents[index])
            exponents[index] -= removed
    return LocalizedClass(num, (exponents[0], exponents[1], exponents[2]))


class LocalizedClass:
    """Immutable element of the localized Grothendieck ring, written as a rational function of q."""

    __slots__ = ("_numerator", "_den", "_hash")

    def __init__(self, numerator: PolyElement, den: Exponents = (0, 0, 0)) -> None:
        # trusted constructor; use canonicalize() for raw input
        self._numerator = numerator
        self._den = den
        self._hash: int | None = None

    # -- constructors -------------------------------------------------
    @classmethod
    def from_int(cls, value: int) -> "LocalizedClass":
        return canonicalize(POLY_RING(int(value)))

    @classmethod
    def from_coefficients(cls, coefficients: Iterable[int], den: Sequence[int] = (0, 0, 0)) -> "LocalizedClass":
        """Build from polynomial coefficients listed low-to-high."""
        terms = {(exp,): int(coeff) for exp, coeff in enumerate(coefficients) if int(coeff) != 0}
        return canonicalize(POLY_RING.from_dict(terms) if terms else POLY_RING.zero, den)

    @classmethod
    def from_terms(cls, terms: Iterable[Tuple[int, int]], den: Sequence[int] = (0, 0, 0)) -> "LocalizedClass":
        """Build from sparse (exponent, coefficient) pairs."""
        accumulated: dict = {}
        for exp, coeff in terms:
            if exp < 0:
                raise ValueError(f"negative exponent {exp} in numerator")
            accumulated[(int(exp),)] = accumulated.get((int(exp),), 0) + int(coeff)
        cleaned = {key: value for key, value in accumulated.items() if value}
        return canonicalize(POLY_RING.from_dict(cleaned) if cleaned else POLY_RING.zero, den)

    # -- accessors ----------------------------------------------------
    @property
    def numerator(self) -> PolyElement:
        return self._numerator

    @property
    def den(self) -> Exponents:
        return self._den

    @property
    def is_polynomial(self) -> bool:
        return self._den == (0, 0, 0)

    def terms(self) -> List[Tuple[int, int]]:
        """Numerator as (exponent, coefficient) pairs in ascending exponent order."""
        return sorted((monom[0], int(coeff)) for monom, coeff in self._numerator.terms())

    def coefficients(self) -> List[int]:
        """Dense numerator coefficients, low-to-high."""
        pairs = self.terms()
        if not pairs:
            return []
        dense = [0] * (pairs[-1][0] + 1)
        for exp, coeff in pairs:
            dense[exp] = coeff
        return dense

    def unit_part(self) -> Tuple[int, Exponents, PolyElement]:
        """Split the numerator as sign * q^i (q+1)^j (q-1)^k * rest."""
        rest = self._numerator
        exps = []
        for factor in _FACTORS:
            rest, count = _strip_factor(rest, factor)
            exps.append(count)
        sign = -1 if rest.LC < 0 else 1
        return sign, (exps[0], exps[1], exps[2]), rest * sign

    @property
    def is_unit(self) -> bool:
        if not self._numerator:
            return False
        _, _, rest = self.unit_part()
        return rest == POLY_RING.one

    # -- arithmetic ---------------------------------------------------
    @staticmethod
    def _coerce(other: object) -> "LocalizedClass | None":
        if isinstance(other, LocalizedClass):
            return other
        if isinstance(other, int):
            return LocalizedClass.from_int(other)
        return None

    def __add__(self, other: object) -> "LocalizedClass":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        if not rhs._numerator:
            return self
        if not self._numerator:
            return rhs
        den = tuple(max(a, b) for a, b in zip(self._den, rhs._den))
        left = self._numerator
        right = rhs._numerator
        for index, factor in enumerate(_FACTORS):
            if den[index] > self._den[index]:
                left = left * factor ** (den[index] - self._den[index])
            if den[index] > rhs._den[index]:
                right = right * factor ** (den[index] - rhs._den[index])
        return canonicalize(left + right, den)

    __radd__ = __add__

    def __neg__(self) -> "LocalizedClass":
        return LocalizedClass(-self._numerator, self._den)

    def __sub__(self, other: object) -> "LocalizedClass":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object) -> "LocalizedClass":
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs - self

    def __mul__(self, other: object) -> "LocalizedClass":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        if not self._numerator or not rhs._numerator:
            return ZERO
        den = tuple(a + b for a, b in zip(self._den, rhs._den))
        return canonicalize(self._numerator * rhs._numerator, den)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "LocalizedClass":
        if exponent < 0:
            return divide_exact(ONE, self) ** (-exponent)
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __truediv__(self, other: object) -> "LocalizedClass":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return divide_exact(self, rhs)

    def __rtruediv__(self, other: object) -> "LocalizedClass":
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return divide_exact(lhs, self)

    def __bool__(self) -> bool:
        return bool(self._numerator)

    def __eq__(self, other: object) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self._den == rhs._den and self._numerator == rhs._numerator

    def __hash__(self) -> int:
        if self._hash is None:
            terms = self.terms()
            if self.is_polynomial and all(exp == 0 for exp, _ in terms):
                # constants compare equal to ints, so they must hash like them
                self._hash = hash(sum(coeff for _, coeff in terms))
            else:
                self._hash = hash((tuple(terms), self._den))
        return self._hash

    def evaluate(self, x: Fraction | int | str) -> Fraction:
        return evaluate_at(self, x)

    def pretty(self) -> str:
        return render_class(self)

    def __str__(self) -> str:
        return render_class(self)

    def __repr__(self) -> str:
        return f"LocalizedClass({render_class(self)!r})"


def ring_arith(a: LocalizedClass, b: LocalizedClass, op: str) -> LocalizedClass:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown ring operation {op!r}")


def divide_exact(a: LocalizedClass, b: LocalizedClass) -> LocalizedClass:
    """Exact quotient a / b inside the localized ring."""
    if not b.numerator:
        raise NotAUnit("division by the zero class", details={"dividend": str(a)})
    rest = b.numerator
    exps = []
    for factor in _FACTORS:
        rest, count = _strip_factor(rest, factor)
        exps.append(count)
    try:
        quotient = a.numerator.exquo(rest)
    except ExactQuotientFailed as exc:
        raise NotAUnit(
            f"{b} is not a unit and does not divide {a}",
            details={"dividend": str(a), "divisor": str(b)},
        ) from exc
    den = [a.den[i] + exps[i] - b.den[i] for i in range(3)]
    return canonicalize(quotient, den)


def evaluate_at(a: LocalizedClass, x: Fraction | int | str) -> Fraction:
    """Exact rational value of the class at q = x."""
    point = Fraction(x)
    denominator = Fraction(1)
    for exp, base, label in zip(a.den, (point, point + 1, point - 1), _FACTOR_LABELS):
        if exp == 0:
            continue
        if base == 0:
            raise PoleAtX(f"{label} vanishes at q = {point}", details={"x": str(point), "class": str(a)})
        denominator *= base**exp
    value = sum((Fraction(coeff) * point**exp for exp, coeff in a.terms()), Fraction(0))
    return value / denominator


def _poly_text(terms: List[Tuple[int, int]], compact: bool) -> str:
    pieces: List[str] = []
    for exp, coeff in sorted(terms, reverse=True):
        magnitude = abs(coeff)
        if exp == 0:
            body = str(magnitude)
        else:
            power = "q" if exp == 1 else f"q^{exp}"
            body = power if magnitude == 1 else f"{magnitude}{power}"
        if not pieces:
            pieces.append(f"-{body}" if coeff < 0 else body)
        elif compact:
            pieces.append(f"{'-' if coeff < 0 else '+'}{body}")
        else:
            pieces.append(f" {'-' if coeff < 0 else '+'} {body}")
    return "".join(pieces)


def render_class(a: LocalizedClass) -> str:
    """Human-readable form, e.g. "q^3 - q" or "(q^2+1)/(q-1)^2"."""
    terms = a.terms()
    if not terms:
        return "0"
    if a.is_polynomial:
        return _poly_text(terms, compact=False)
    numerator = _poly_text(terms, compact=True)
    if len(terms) > 1:
        numerator = f"({numerator})"
    factors = []
    for exp, label in zip(a.den, _FACTOR_LABELS):
        if exp == 1:
            factors.append(label)
        elif exp > 1:
            factors.append(f"{label}^{exp}")
    return f"{numerator}/{''.join(factors)}"


ZERO = LocalizedClass(POLY_RING.zero)
ONE = LocalizedClass(POLY_RING.one)
Q = LocalizedClass(_q)
# |SL2| = [PGL2] = q^3 - q, the normalising unit of every tube operator
P3 = Q**3 - Q
