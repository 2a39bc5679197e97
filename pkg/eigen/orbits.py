"""Trace orbits {lambda, lambda^-1} indexing the skyscraper generators."""
from __future__ import annotations

from dataclasses import dataclass

from eigen.errors import NotAnOrbit
from eigen.values import (
    Backend,
    EigenClass,
    Rational,
    RootOfUnity,
    Symbolic,
    UnitKind,
    classify_unit,
    eigen_inv,
    eigen_sort_key,
)


def _canonical(a: EigenClass) -> EigenClass:
    if isinstance(a, Rational):
        # keep the member with |lambda| > 1
        other = Rational(1 / a.value)
        return a if abs(a.value) > 1 else other
    if isinstance(a, RootOfUnity):
        reduced = a.reduced()
        low = min(reduced.exponent, reduced.order - reduced.exponent)
        return RootOfUnity(reduced.order, low)
    assert isinstance(a, Symbolic)
    leading = next(e for e in a.exponents if e)
    return a if leading > 0 else eigen_inv(a)


@dataclass(frozen=True)
class TraceOrbit:
    """Unordered pair {lambda, lambda^-1} with lambda != +1, -1, stored by its canonical member."""

    representative: EigenClass

    @property
    def backend(self) -> Backend:
        return self.representative.backend

    @property
    def sort_key(self) -> tuple:
        return eigen_sort_key(self.representative)

    def __lt__(self, other: "TraceOrbit") -> bool:
        return self.sort_key < other.sort_key


def orbit_of(a: EigenClass) -> TraceOrbit:
    kind = classify_unit(a)
    if kind is not UnitKind.GENERIC:
        raise NotAnOrbit(f"eigenvalue is {kind.value}; traces +2 and -2 are core strata", details={"kind": kind.value})
    return TraceOrbit(_canonical(a))


def orbit_eq(first: TraceOrbit, second: TraceOrbit) -> bool:
    return first.representative == second.representative
