"""Vectorized enumeration of SL(2, F_p) with conjugacy classes and their strata."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Dict, FrozenSet, List, Optional, Tuple

import numpy as np
from sympy import isprime, legendre_symbol

from engine_config import EngineConfig
from ffcount.errors import NotPrime, PrimeTooLarge, TraceNotLiftable

logger = logging.getLogger(__name__)

# Conjugacy class ids. The two classes inside [J+] (and [J-]) are told apart by the square class
# of the off-diagonal entry; Theta(t) is the single class of regular semisimple elements of trace t.
ID = 0
MINUS_ID = 1
J_PLUS_SQUARE = 2
J_PLUS_NONSQUARE = 3
J_MINUS_SQUARE = 4
J_MINUS_NONSQUARE = 5
THETA_OFFSET = 6

# Stratum ids: 0 Id, 1 -Id, 2 [J+], 3 [J-], 4 + t for Theta(t).
STRATUM_ID = 0
STRATUM_MINUS_ID = 1
STRATUM_J_PLUS = 2
STRATUM_J_MINUS = 3
STRATUM_THETA = 4

Matrices = Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]


class ProfileTag(str, Enum):
    ID = "Id"
    MINUS_ID = "MinusId"
    J_PLUS = "JPlus"
    J_MINUS = "JMinus"
    THETA = "Theta"


@dataclass(frozen=True)
class ClassProfile:
    tag: ProfileTag
    trace: Optional[int] = None


@dataclass(eq=False)
class GroupData:
    """All of SL(2, F_p) as four residue arrays plus class bookkeeping."""

    p: int
    a: np.ndarray
    b: np.ndarray
    c: np.ndarray
    d: np.ndarray
    chi: np.ndarray
    class_ids: np.ndarray
    class_sizes: np.ndarray
    representatives: Dict[int, int]
    _cache: Dict[object, np.ndarray] = field(default_factory=dict, repr=False)

    @property
    def order(self) -> int:
        return int(self.a.shape[0])

    @property
    def classes(self) -> List[int]:
        return sorted(self.representatives)

    @property
    def n_slots(self) -> int:
        return THETA_OFFSET + self.p

    @property
    def n_strata(self) -> int:
        return STRATUM_THETA + self.p

    def theta_traces(self) -> List[int]:
        return [t for t in range(self.p) if t not in (2, self.p - 2)]

    def element(self, index: int) -> Tuple[int, int, int, int]:
        return int(self.a[index]), int(self.b[index]), int(self.c[index]), int(self.d[index])

    def representative(self, class_id: int) -> Tuple[int, int, int, int]:
        return self.element(self.representatives[class_id])

    def classify(self, a: np.ndarray, b: np.ndarray, c: np.ndarray, d: np.ndarray) -> np.ndarray:
        p = self.p
        trace = (a + d) % p
        central = (b == 0) & (c == 0)

        def jordan(sign: int, square: int, nonsquare: int) -> np.ndarray:
            invariant = np.where(b != 0, self.chi[(sign * b) % p], self.chi[(-sign * c) % p])
            return np.where(invariant == 1, square, nonsquare)

        ids = THETA_OFFSET + trace
        ids = np.where(trace == 2, np.where(central, ID, jordan(1, J_PLUS_SQUARE, J_PLUS_NONSQUARE)), ids)
        ids = np.where(trace == p - 2, np.where(central, MINUS_ID, jordan(-1, J_MINUS_SQUARE, J_MINUS_NONSQUARE)), ids)
        return ids.astype(np.int64)

    @property
    def class_stratum(self) -> np.ndarray:
        """Lookup table class id -> stratum id."""
        table = self._cache.get("class_stratum")
        if table is None:
            table = np.arange(self.n_slots, dtype=np.int64) - (THETA_OFFSET - STRATUM_THETA)
            table[ID] = STRATUM_ID
            table[MINUS_ID] = STRATUM_MINUS_ID
            table[[J_PLUS_SQUARE, J_PLUS_NONSQUARE]] = STRATUM_J_PLUS
            table[[J_MINUS_SQUARE, J_MINUS_NONSQUARE]] = STRATUM_J_MINUS
            self._cache["class_stratum"] = table
        return table

    @property
    def strata(self) -> np.ndarray:
        """Stratum id of every element."""
        return self.class_stratum[self.class_ids]

    @property
    def centralizers(self) -> np.ndarray:
        sizes = self.class_sizes
        return np.where(sizes > 0, self.order // np.maximum(sizes, 1), 0)

    def classes_in_stratum(self, stratum: int) -> FrozenSet[int]:
        return frozenset(k for k in self.representatives if int(self.class_stratum[k]) == stratum)

    def profile_of_stratum(self, stratum: int) -> ClassProfile:
        if stratum >= STRATUM_THETA:
            return ClassProfile(ProfileTag.THETA, stratum - STRATUM_THETA)
        return ClassProfile([ProfileTag.ID, ProfileTag.MINUS_ID, ProfileTag.J_PLUS, ProfileTag.J_MINUS][stratum])

    def inverses(self) -> Matrices:
        p = self.p
        return self.d, (-self.b) % p, (-self.c) % p, self.a

    def left_times_all(self, x: Tuple[int, int, int, int], elements: Optional[Matrices] = None) -> Matrices:
        """x * Y for every Y in ``elements`` (default: the whole group)."""
        a1, b1, c1, d1 = x
        A, B, C, D = elements if elements is not None else (self.a, self.b, self.c, self.d)
        p = self.p
        return (a1 * A + b1 * C) % p, (a1 * B + b1 * D) % p, (c1 * A + d1 * C) % p, (c1 * B + d1 * D) % p

    def all_times_right(self, elements: Matrices, x: Tuple[int, int, int, int]) -> Matrices:
        """Y * x for every Y in ``elements``."""
        a1, b1, c1, d1 = x
        A, B, C, D = elements
        p = self.p
        return (A * a1 + B * c1) % p, (A * b1 + B * d1) % p, (C * a1 + D * c1) % p, (C * b1 + D * d1) % p

    @property
    def inverse_class(self) -> np.ndarray:
        table = self._cache.get("inverse_class")
        if table is None:
            table = np.arange(self.n_slots, dtype=np.int64)
            p = self.p
            for k in self.representatives:
                a, b, c, d = self.representative(k)
                inv = [np.array([v]) for v in (d, (-b) % p, (-c) % p, a)]
                table[k] = int(self.classify(*inv)[0])
            self._cache["inverse_class"] = table
        return table

    @property
    def commutator_counts(self) -> np.ndarray:
        """N[k] = #{(g1, g2) : [g1, g2] = y} for y in class k."""
        counts = self._cache.get("commutator_counts")
        if counts is None:
            counts = np.zeros(self.n_slots, dtype=np.int64)
            inverses = self.inverses()
            own = self.inverse_class[self.class_ids]
            z_sizes = self.centralizers[self.class_ids]
            for k in self.representatives:
                products = self.all_times_right(inverses, self.representative(k))
                hits = self.classify(*products) == own
                counts[k] = int(z_sizes[hits].sum())
            self._cache["commutator_counts"] = counts
            logger.debug("p=%d commuting pairs: %d", self.p, int(counts[ID]))
        return counts


def regular_trace(group: GroupData, t: int) -> int:
    """Residue of t, which must not be +-2 mod p."""
    residue = int(t) % group.p
    if residue in (2, group.p - 2):
        raise TraceNotLiftable(
            f"trace {t} is +-2 mod {group.p}; no regular semisimple class",
            details={"p": group.p, "trace": int(t)},
        )
    return residue


def legendre_table(p: int) -> np.ndarray:
    """chi(x) for x = 0..p-1, with chi(0) = 0."""
    return np.array([0] + [legendre_symbol(x, p) for x in range(1, p)], dtype=np.int64)


def _enumerate(p: int) -> Matrices:
    inverse = np.array([0] + [pow(x, -1, p) for x in range(1, p)], dtype=np.int64)
    units = np.arange(1, p, dtype=np.int64)
    full = np.arange(p, dtype=np.int64)
    # a != 0: d is determined by a, b, c
    A, B, C = (m.ravel() for m in np.meshgrid(units, full, full, indexing="ij"))
    D = ((1 + B * C) % p * inverse[A]) % p
    # a == 0: bc = -1
    B0, D0 = (m.ravel() for m in np.meshgrid(units, full, indexing="ij"))
    C0 = (-inverse[B0]) % p
    A0 = np.zeros_like(B0)
    return (
        np.concatenate([A, A0]),
        np.concatenate([B, B0]),
        np.concatenate([C, C0]),
        np.concatenate([D, D0]),
    )


def _check_prime(p: int, max_prime: int) -> None:
    if p < 3 or not isprime(p):
        raise NotPrime(f"{p} is not an odd prime", details={"p": p})
    if p > max_prime:
        raise PrimeTooLarge(f"p={p} exceeds the enumeration limit {max_prime}", details={"p": p, "max_prime": max_prime})


@lru_cache(maxsize=8)
def _build(p: int) -> GroupData:
    a, b, c, d = _enumerate(p)
    shell = GroupData(
        p=p, a=a, b=b, c=c, d=d, chi=legendre_table(p),
        class_ids=np.zeros(0, dtype=np.int64), class_sizes=np.zeros(0, dtype=np.int64), representatives={},
    )
    ids = shell.classify(a, b, c, d)
    sizes = np.bincount(ids, minlength=shell.n_slots).astype(np.int64)
    present, first = np.unique(ids, return_index=True)
    shell.class_ids = ids
    shell.class_sizes = sizes
    shell.representatives = {int(k): int(i) for k, i in zip(present, first)}
    if int(sizes.sum()) != p**3 - p:
        raise AssertionError(f"class sizes of SL(2, F_{p}) do not sum to the group order")
    logger.info("Enumerated SL(2, F_%d): %d elements, %d classes", p, shell.order, len(present))
    return shell


def group_data(p: int, *, max_prime: Optional[int] = None) -> GroupData:
    limit = max_prime if max_prime is not None else EngineConfig.from_env().max_prime
    _check_prime(int(p), int(limit))
    return _build(int(p))
