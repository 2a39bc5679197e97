"""Exact fitting of the Handle and Jordan core matrices from finite-field fiber counts.

Per-prime tables are computed independently (joblib workers) and cached on disk with
joblib.dump; the interpolation itself is single-threaded and exact over Q.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import joblib
from joblib import Parallel, delayed
from sympy import Poly, Symbol, legendre_symbol
from sympy.polys.polyfuncs import interpolate

from eigen.orbits import orbit_of
from eigen.values import Symbolic, eigen_neg
from engine_config import EngineConfig
from ffcount.lifting import lift_trace, trace_of_eigenvalue
from ffcount.profiles import fiber_profile_counts, samples_every_pattern
from interpolate.errors import NonIntegralFit, ValidationFailed
from kring.localized import P3, LocalizedClass, divide_exact
from monitor.metrics import record_fit
from operators.datafile import FittedOperator, write_operator_file
from operators.linear import TubeKind
from operators.semisimple import UNREDUCED_PREFACTOR, unreduced_columns
from operators.tubes import handle_sky_image, jordan_sky_image
from wmodule.element import CORE_ORDER, CoreGenerator

logger = logging.getLogger(__name__)

_Q = Symbol("q")
# first candidate for the skyscraper check trace; later ones are used when its pair hides a pattern
SKY_CHECK_TRACE = 1
TRACE0_ROW = "T_t0"
MINUS_TRACE0_ROW = "T_-t0"


@dataclass(frozen=True)
class FitShape:
    degree_bound: int
    prefactor_power: int

    @property
    def prefactor(self) -> LocalizedClass:
        return P3**self.prefactor_power

    @property
    def quotient_bound(self) -> int:
        return self.degree_bound - 3 * self.prefactor_power


FIT_SHAPES: Dict[TubeKind, FitShape] = {
    TubeKind.HANDLE: FitShape(degree_bound=12, prefactor_power=2),
    TubeKind.JORDAN_PLUS: FitShape(degree_bound=8, prefactor_power=1),
    TubeKind.JORDAN_MINUS: FitShape(degree_bound=8, prefactor_power=1),
}
SEMISIMPLE_DEGREE_BOUND = 8


@dataclass(frozen=True)
class PrimeTable:
    """Fiber counts at one prime: entries[(output row, input generator)] plus a skyscraper check column."""

    p: int
    kind: TubeKind
    entries: Dict[Tuple[str, str], int]
    trace0: Optional[int] = None
    sky_trace: Optional[int] = None
    sky_core: Dict[str, int] = field(default_factory=dict)
    sky: Dict[int, int] = field(default_factory=dict)

    def value(self, row: str, source: CoreGenerator) -> int:
        return self.entries.get((row, source.value), 0)


def sky_check_trace(p: int) -> int:
    """Regular trace t whose pair {t, -t} leaves every character pattern sampled."""
    for offset in range(p):
        t = (SKY_CHECK_TRACE + offset) % p
        if t not in (2, p - 2) and samples_every_pattern(p, (t, -t)):
            return t
    raise ValidationFailed(f"no usable skyscraper check trace mod {p}", details={"p": p})


def semisimple_residue(p: int) -> int:
    """Smallest nonzero square lambda0 mod p with lambda0^2 != +-1 whose traces +-t0 leave
    every character pattern sampled.

    t0 = lambda0 + 1/lambda0 always has pattern (1, 1), so small primes (13) have none.
    """
    for value in range(2, p):
        if legendre_symbol(value, p) != 1 or (value * value) % p in (1, p - 1):
            continue
        t0 = (value + pow(value, -1, p)) % p
        if samples_every_pattern(p, (t0, -t0)):
            return value
    raise ValidationFailed(f"no usable semisimple eigenvalue mod {p}", details={"p": p})


def collect_prime_table(p: int, kind: TubeKind, *, max_prime: Optional[int] = None) -> PrimeTable:
    trace0 = None
    if kind is TubeKind.SEMISIMPLE:
        lam = semisimple_residue(p)
        trace0 = (lam + pow(lam, -1, p)) % p
    entries: Dict[Tuple[str, str], int] = {}
    for source in CORE_ORDER:
        profile = fiber_profile_counts(p, kind, source, trace0=trace0, max_prime=max_prime)
        for output, value in profile.core.items():
            entries[(output.value, source.value)] = value
        if trace0 is not None:
            for row, trace in ((TRACE0_ROW, trace0), (MINUS_TRACE0_ROW, (-trace0) % p)):
                if profile.sky.get(trace):
                    entries[(row, source.value)] = profile.sky[trace]
    if kind is TubeKind.SEMISIMPLE:
        return PrimeTable(p=p, kind=kind, entries=entries, trace0=trace0)
    check_trace = sky_check_trace(p)
    column = fiber_profile_counts(p, kind, check_trace, max_prime=max_prime)
    return PrimeTable(
        p=p,
        kind=kind,
        entries=entries,
        sky_trace=check_trace,
        sky_core={gen.value: value for gen, value in column.core.items()},
        sky=dict(column.sky),
    )


def cached_prime_table(
    p: int,
    kind: TubeKind,
    *,
    cache_dir: Optional[Path] = None,
    max_prime: Optional[int] = None,
) -> PrimeTable:
    if cache_dir is None:
        return collect_prime_table(p, kind, max_prime=max_prime)
    path = Path(cache_dir) / f"{kind.value}-p{p}.joblib"
    if path.exists():
        logger.debug("Reusing cached fiber table %s", path)
        return joblib.load(path)
    table = collect_prime_table(p, kind, max_prime=max_prime)
    path.parent.mkdir(parents=True, exist_ok=True)
    joblib.dump(table, path)
    return table


def collect_tables(
    kind: TubeKind,
    primes: Iterable[int],
    *,
    n_jobs: int = 1,
    cache_dir: Optional[Path] = None,
    max_prime: Optional[int] = None,
) -> Dict[int, PrimeTable]:
    ordered = sorted(set(int(p) for p in primes))
    logger.info("Collecting %s fiber tables at primes %s (n_jobs=%d)", kind.value, ordered, n_jobs)
    tables = Parallel(n_jobs=n_jobs)(
        delayed(cached_prime_table)(p, kind, cache_dir=cache_dir, max_prime=max_prime) for p in ordered
    )
    return {table.p: table for table in tables}


def fit_polynomial(points: Sequence[Tuple[int, int]], prefactor: LocalizedClass, max_degree: int) -> Tuple[int, ...]:
    """Coefficients (low to high) of the integer polynomial f with prefactor(p) * f(p) = value."""
    data: List[Tuple[int, int]] = []
    for p, value in points:
        quotient = Fraction(value) / prefactor.evaluate(p)
        if quotient.denominator != 1:
            raise NonIntegralFit(
                f"count {value} at p={p} is not divisible by the prefactor",
                details={"p": p, "value": value, "prefactor": str(prefactor)},
            )
        data.append((p, int(quotient)))
    poly = Poly(interpolate(data, _Q), _Q)
    coefficients = list(reversed(poly.all_coeffs()))
    if any(not c.is_integer for c in coefficients):
        raise NonIntegralFit(
            "interpolation left Z[q]",
            details={"points": [p for p, _ in points], "coefficients": [str(c) for c in coefficients]},
        )
    values = [int(c) for c in coefficients]
    while values and values[-1] == 0:
        values.pop()
    if len(values) - 1 > max_degree:
        raise NonIntegralFit(
            f"fitted quotient has degree {len(values) - 1} > {max_degree}",
            details={"points": [p for p, _ in points], "degree": len(values) - 1, "bound": max_degree},
        )
    return tuple(values)


def split_primes(
    primes: Sequence[int],
    needed: int,
    held_out: Optional[Sequence[int]] = None,
) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Fitting primes and held-out primes; all must be = 1 mod 4 and at least 13."""
    ordered = sorted(set(int(p) for p in primes))
    if held_out is None:
        fit, held = ordered[:needed], ordered[needed:]
    else:
        fit, held = ordered, sorted(set(int(p) for p in held_out) - set(ordered))
    outside = [p for p in list(fit) + list(held) if p % 4 != 1 or p < 13]
    if outside:
        raise ValidationFailed(
            f"primes {outside} lie outside the polynomial-count regime (need p = 1 mod 4, p >= 13)",
            details={"primes": outside},
        )
    if len(fit) < needed:
        raise ValidationFailed(
            f"{len(fit)} fitting primes cannot determine a polynomial of degree {needed - 1}",
            details={"fit": list(fit), "needed": needed},
        )
    if len(held) < 2:
        raise ValidationFailed("at least two held-out primes are required", details={"held_out": list(held)})
    return tuple(fit), tuple(held)


def expected_sky_column(kind: TubeKind, p: int, trace: int) -> Tuple[Dict[str, int], Dict[int, int]]:
    """Closed skyscraper column of ``kind`` at a regular trace, evaluated at q = p."""
    orbit = orbit_of(lift_trace(p, trace))
    if kind is TubeKind.HANDLE:
        image = handle_sky_image(orbit)
    else:
        image = jordan_sky_image(1 if kind is TubeKind.JORDAN_PLUS else -1, orbit)
    core = {gen.value: int(coeff.evaluate(p)) for gen, coeff in image.core_items()}
    sky = {trace_of_eigenvalue(p, key.representative): int(coeff.evaluate(p)) for key, coeff in image.sky_items()}
    return {k: v for k, v in core.items() if v}, {k: v for k, v in sky.items() if v}


def check_sky_column(table: PrimeTable) -> None:
    core, sky = expected_sky_column(table.kind, table.p, int(table.sky_trace))  # type: ignore[arg-type]
    if core != table.sky_core or sky != table.sky:
        raise ValidationFailed(
            f"{table.kind.value} skyscraper column disagrees with the counts at p={table.p}",
            details={"p": table.p, "expected": {"core": core, "sky": sky}, "counted": {"core": table.sky_core, "sky": table.sky}},
        )


def fit_core_matrix(
    kind: TubeKind,
    primes: Sequence[int],
    *,
    held_out: Optional[Sequence[int]] = None,
    n_jobs: Optional[int] = None,
    cache_dir: Optional[Path] = None,
    max_prime: Optional[int] = None,
) -> FittedOperator:
    config = EngineConfig.from_env()
    shape = FIT_SHAPES[kind]
    fit, held = split_primes(primes, shape.quotient_bound + 1, held_out)
    tables = collect_tables(
        kind,
        fit + held,
        n_jobs=n_jobs if n_jobs is not None else config.n_jobs,
        cache_dir=cache_dir,
        max_prime=max_prime if max_prime is not None else config.fit_max_prime,
    )
    for table in tables.values():
        check_sky_column(table)
    rows = []
    for output in CORE_ORDER:
        rows.append(tuple(
            fit_polynomial([(p, tables[p].value(output.value, source)) for p in fit], shape.prefactor, shape.quotient_bound)
            for source in CORE_ORDER
        ))
    operator = FittedOperator(
        kind=kind,
        entries=tuple(rows),
        prefactor_power=shape.prefactor_power,
        degree_bound=shape.degree_bound,
        primes=fit,
        held_out=held,
    )
    for p in held:
        for output in CORE_ORDER:
            for source in CORE_ORDER:
                predicted = operator.entry(output, source).evaluate(p)
                counted = tables[p].value(output.value, source)
                if predicted != counted:
                    raise ValidationFailed(
                        f"{kind.value} entry {source.value}->{output.value} fails at held-out p={p}",
                        details={"p": p, "predicted": str(predicted), "counted": counted},
                    )
    record_fit(kind.value, len(fit))
    logger.info("Fitted %s from primes %s, held out %s, checksum %s", kind.value, fit, held, operator.checksum)
    return operator


@dataclass(frozen=True)
class SemisimpleValidation:
    primes: Tuple[int, ...]
    held_out: Tuple[int, ...]
    fitted: Dict[Tuple[str, str], Tuple[int, ...]]


def _symbolic_semisimple_rows() -> Dict[Tuple[str, str], Tuple[int, ...]]:
    lam = Symbolic(1, (1,))
    plus, minus = orbit_of(lam), orbit_of(eigen_neg(lam))
    rows: Dict[Tuple[str, str], Tuple[int, ...]] = {}
    for source, image in unreduced_columns(lam).items():
        for key, coeff in image.items():
            if isinstance(key, CoreGenerator):
                row = key.value
            elif key == plus:
                row = TRACE0_ROW
            elif key == minus:
                row = MINUS_TRACE0_ROW
            else:
                continue
            rows[(row, source.value)] = tuple(divide_exact(coeff, UNREDUCED_PREFACTOR).coefficients())
    return rows


def _with_semisimple_residue(primes: Sequence[int]) -> List[int]:
    usable = []
    for p in primes:
        try:
            semisimple_residue(p)
        except ValidationFailed:
            logger.warning("Skipping p=%d: no semisimple eigenvalue keeps the profile system solvable", p)
            continue
        usable.append(p)
    return usable


def validate_semisimple_tube(
    primes: Sequence[int],
    *,
    held_out: Optional[Sequence[int]] = None,
    n_jobs: Optional[int] = None,
    cache_dir: Optional[Path] = None,
    max_prime: Optional[int] = None,
) -> SemisimpleValidation:
    """Fit the unreduced semisimple tube from counts and compare it with the closed images."""
    config = EngineConfig.from_env()
    quotient_bound = SEMISIMPLE_DEGREE_BOUND - 5
    usable_held = None if held_out is None else _with_semisimple_residue(held_out)
    fit, held = split_primes(_with_semisimple_residue(primes), quotient_bound + 1, usable_held)
    tables = collect_tables(
        TubeKind.SEMISIMPLE,
        fit + held,
        n_jobs=n_jobs if n_jobs is not None else config.n_jobs,
        cache_dir=cache_dir,
        max_prime=max_prime if max_prime is not None else config.fit_max_prime,
    )
    expected = _symbolic_semisimple_rows()
    labels = [gen.value for gen in CORE_ORDER] + [TRACE0_ROW, MINUS_TRACE0_ROW]
    fitted: Dict[Tuple[str, str], Tuple[int, ...]] = {}
    for row in labels:
        for source in CORE_ORDER:
            coefficients = fit_polynomial(
                [(p, tables[p].value(row, source)) for p in fit], UNREDUCED_PREFACTOR, quotient_bound
            )
            closed = expected.get((row, source.value), ())
            if coefficients != closed:
                raise ValidationFailed(
                    f"semisimple entry {source.value}->{row} disagrees with the closed image",
                    details={"fitted": list(coefficients), "expected": list(closed)},
                )
            entry = UNREDUCED_PREFACTOR * LocalizedClass.from_coefficients(closed)
            for p in held:
                if entry.evaluate(p) != tables[p].value(row, source):
                    raise ValidationFailed(
                        f"semisimple entry {source.value}->{row} fails at held-out p={p}",
                        details={"p": p, "counted": tables[p].value(row, source)},
                    )
            if coefficients:
                fitted[(row, source.value)] = coefficients
    logger.info("Semisimple tube matches its closed images at primes %s", fit + held)
    return SemisimpleValidation(primes=fit, held_out=held, fitted=fitted)


def refit_operators(
    path: Optional[Path] = None,
    *,
    n_jobs: Optional[int] = None,
    cache_dir: Optional[Path] = None,
    config: Optional[EngineConfig] = None,
) -> List[FittedOperator]:
    """Regenerate the operator data file from the configured prime lists."""
    settings = config or EngineConfig.from_env()
    plan = {
        TubeKind.HANDLE: settings.handle_primes,
        TubeKind.JORDAN_PLUS: settings.jordan_primes,
        TubeKind.JORDAN_MINUS: settings.jordan_primes,
    }
    operators = [
        fit_core_matrix(
            kind,
            primes,
            n_jobs=n_jobs if n_jobs is not None else settings.n_jobs,
            cache_dir=cache_dir,
            max_prime=settings.fit_max_prime,
        )
        for kind, primes in plan.items()
    ]
    write_operator_file(path or settings.data_file, operators)
    return operators
