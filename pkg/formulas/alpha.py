"""Interaction counts of a tuple of semisimple eigenvalues."""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence, Tuple

from eigen.values import EigenClass, UnitKind, classify_unit, eigen_product, require_backend
from engine_config import EngineConfig
from formulas.errors import TooManyPunctures
from operators.errors import InvalidSurface

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AlphaCounts:
    """Half the number of sign tuples whose signed product is +1 (alpha_plus) or -1 (alpha_minus)."""

    alpha_plus: int
    alpha_minus: int

    def swapped(self) -> "AlphaCounts":
        return AlphaCounts(self.alpha_minus, self.alpha_plus)


def check_eigenvalues(eigs: Sequence[EigenClass], *, cap: Optional[int] = None) -> None:
    limit = cap if cap is not None else EngineConfig.from_env().alpha_cap
    if len(eigs) > limit:
        raise TooManyPunctures(
            f"{len(eigs)} semisimple punctures exceed the cap of {limit}",
            details={"s": len(eigs), "cap": limit},
        )
    require_backend(eigs)
    for value in eigs:
        if classify_unit(value) is not UnitKind.GENERIC:
            raise InvalidSurface("semisimple eigenvalues must differ from +1 and -1")


def half_sign_tuples(s: int) -> Iterator[Tuple[int, ...]]:
    """Sign tuples with first entry +1: one from each pair {eps, -eps}."""
    for tail in itertools.product((1, -1), repeat=s - 1):
        yield (1,) + tail


def alpha_counts(eigs: Sequence[EigenClass], *, cap: Optional[int] = None) -> AlphaCounts:
    check_eigenvalues(eigs, cap=cap)
    if not eigs:
        return AlphaCounts(0, 0)
    plus = minus = 0
    for signs in half_sign_tuples(len(eigs)):
        kind = classify_unit(eigen_product(eigs, signs))
        if kind is UnitKind.IS_ONE:
            plus += 1
        elif kind is UnitKind.IS_MINUS_ONE:
            minus += 1
    logger.debug("alpha counts for s=%d: (%d, %d)", len(eigs), plus, minus)
    return AlphaCounts(plus, minus)
