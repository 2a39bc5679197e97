"""Acceptance checks runnable from the verify command."""
from __future__ import annotations

import logging
from dataclasses import asdict, dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from eigen.orbits import orbit_of
from eigen.syntax import parse_eigen_list
from engine_config import EngineConfig
from ffcount.lifting import compare_point_count
from ffcount.points import ResidueSurface
from formulas.char import check_char_routes, reducible_and_diag_classes, reducible_strata
from formulas.coefficients import iterated_tube_closed_form
from formulas.rep import rep_class_for_surface
from kring.errors import EngineError
from operators.datafile import FittedOperator
from operators.eta import eta_apply, eta_inverse_apply
from operators.linear import TubeKind
from operators.surface import SurfaceSpec, assemble_representation_class, iterated_semisimple
from wmodule.element import CORE_ORDER, ModuleElement

logger = logging.getLogger(__name__)

Data = Dict[TubeKind, FittedOperator]

EIGEN_SETS: Tuple[Tuple[str, ...], ...] = (
    ("sym:x1",),
    ("sym:x1", "sym:x2"),
    ("rat:2", "rat:1/2"),
    ("zeta:4:1", "zeta:4:1"),
    ("zeta:3:1", "zeta:3:1", "zeta:3:1"),
)

# (genus, jordan_plus, minus_id, residue traces, prime); all inside the polynomial-count regime or both sides 0
ORACLE_CASES: Tuple[Tuple[int, int, int, Tuple[int, ...], int], ...] = (
    (1, 0, 0, (), 3),
    (1, 0, 0, (), 5),
    (1, 0, 0, (0,), 17),
    (1, 1, 0, (), 3),
    (0, 0, 0, (0,), 3),
    (1, 0, 0, (6,), 7),
)


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


def _run(name: str, body: Callable[[], Optional[str]]) -> Check:
    try:
        failure = body()
    except EngineError as exc:
        logger.debug("check %s raised %s", name, exc.code)
        return Check(name, False, f"{exc.code}: {exc}")
    return Check(name, failure is None, failure or "")


def _eta_round_trip() -> Optional[str]:
    vectors = [ModuleElement.basis(gen) for gen in CORE_ORDER]
    vectors.append(ModuleElement.basis(orbit_of(parse_eigen_list(["sym:x1"])[0])))
    for vector in vectors:
        if eta_inverse_apply(eta_apply(vector)) != vector or eta_apply(eta_inverse_apply(vector)) != vector:
            return f"eta does not invert on {vector}"
    return None


def _iterated_closed_form(texts: Sequence[str]) -> Callable[[], Optional[str]]:
    def body() -> Optional[str]:
        eigs = tuple(parse_eigen_list(texts))
        if iterated_tube_closed_form(eigs) != iterated_semisimple(eigs):
            return "closed form differs from the applied tubes"
        return None

    return body


def _rep_closed_form(spec: SurfaceSpec, data: Data) -> Callable[[], Optional[str]]:
    def body() -> Optional[str]:
        closed = rep_class_for_surface(spec)
        pipeline = assemble_representation_class(spec, data=data)
        return None if closed == pipeline else f"closed {closed} != pipeline {pipeline}"

    return body


def _char_routes(spec: SurfaceSpec) -> Callable[[], Optional[str]]:
    def body() -> Optional[str]:
        check_char_routes(spec)
        reducible, _ = reducible_and_diag_classes(spec.genus, spec.semisimple)
        if reducible_strata(spec.genus, spec.semisimple).total != reducible:
            return "reducible strata do not add up to the reducible locus"
        return None

    return body


def _oracle(surface: ResidueSurface, p: int, data: Data, work_limit: int) -> Callable[[], Optional[str]]:
    def body() -> Optional[str]:
        result = compare_point_count(p, surface, data=data, work_limit=work_limit)
        return None if result.agree else f"count {result.count} != predicted {result.predicted}"

    return body


def run_acceptance_suite(data: Data, *, config: Optional[EngineConfig] = None) -> List[Check]:
    settings = config or EngineConfig.from_env()
    checks = [_run("eta round trip", _eta_round_trip)]
    for texts in EIGEN_SETS:
        checks.append(_run(f"iterated tube {','.join(texts)}", _iterated_closed_form(texts)))
    for genus in (1, 2):
        for jordan_plus in (0, 1):
            for texts in EIGEN_SETS[:4]:
                spec = SurfaceSpec(genus=genus, jordan_plus=jordan_plus, semisimple=tuple(parse_eigen_list(texts)))
                label = f"g={genus} r={jordan_plus} {','.join(texts)}"
                checks.append(_run(f"rep {label}", _rep_closed_form(spec, data)))
                checks.append(_run(f"char {label}", _char_routes(spec)))
    for jordan_plus in (1, 2):
        spec = SurfaceSpec(genus=1, jordan_plus=jordan_plus)
        checks.append(_run(f"rep g=1 r={jordan_plus} jordan only", _rep_closed_form(spec, data)))
    for genus, jordan_plus, minus_id, traces, p in ORACLE_CASES:
        surface = ResidueSurface(genus=genus, jordan_plus=jordan_plus, minus_id=minus_id, traces=traces)
        name = f"oracle p={p} g={genus} r={jordan_plus} traces={list(traces)}"
        checks.append(_run(name, _oracle(surface, p, data, settings.work_limit)))
    failed = sum(not check.passed for check in checks)
    logger.info("acceptance suite: %d checks, %d failed", len(checks), failed)
    return checks


def checks_to_dicts(checks: Sequence[Check]) -> List[Dict[str, object]]:
    return [asdict(check) for check in checks]
