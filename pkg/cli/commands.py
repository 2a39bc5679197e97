"""Command handlers; each returns a CommandResult that the front end renders."""
from __future__ import annotations

import logging
import sys
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence, TextIO

from cli.errors import VerificationFailed
from cli.jobs import JobSpec, parse_job
from cli.render import checks_frame, class_payload, class_text, dump_json, frame_text, tube_frame
from cli.suite import checks_to_dicts, run_acceptance_suite
from ffcount.budget import WorkBudget
from ffcount.lifting import compare_point_count
from ffcount.points import count_representation_points
from formulas.char import char_class_closed, check_char_routes
from formulas.errors import ClosedFormMismatch
from formulas.rep import rep_class_for_surface
from interpolate.fit import refit_operators
from kring.errors import EngineError
from kring.localized import LocalizedClass
from monitor.metrics import record_command_runtime
from operators.linear import TubeKind, TubeOperator
from operators.semisimple import semisimple_tube
from operators.surface import SurfaceSpec, assemble_representation_class
from operators.tubes import handle_tube, jordan_tube, load_operator_data
from wmodule.codec import element_to_json
from wmodule.element import CORE_ORDER, ModuleElement

logger = logging.getLogger(__name__)


@dataclass
class CommandResult:
    command: str
    payload: Dict[str, Any]
    lines: List[str] = field(default_factory=list)
    status: int = 0

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return dump_json(self.payload) + "\n"
        return "\n".join(self.lines) + "\n"


def _cross_check_rep(spec: SurfaceSpec, pipeline: LocalizedClass) -> None:
    closed = rep_class_for_surface(spec)
    if closed != pipeline:
        raise ClosedFormMismatch(
            "closed formula and operator pipeline disagree",
            details={"surface": spec.to_dict(), "closed": str(closed), "pipeline": str(pipeline)},
        )
    logger.info("closed formula agrees with the pipeline for %s", spec.to_dict())


def compute_rep(job: JobSpec) -> CommandResult:
    spec = job.surface()
    data = load_operator_data(job.config().data_file)
    value = assemble_representation_class(spec, reduce_holonomy=not job.direct_jordan_minus, data=data)
    payload: Dict[str, Any] = {"command": job.command, "surface": spec.to_dict(), **class_payload(value)}
    lines = class_text("[Rep]", payload)
    if job.verify:
        _cross_check_rep(spec, value)
        payload["verified"] = True
        lines.append("verified: closed formula agrees with the operator pipeline")
    return CommandResult(job.command, payload, lines)


def compute_char(job: JobSpec) -> CommandResult:
    spec = job.surface()
    if job.verify:
        value = check_char_routes(spec)
        data = load_operator_data(job.config().data_file)
        _cross_check_rep(spec, assemble_representation_class(spec, data=data))
    else:
        value = char_class_closed(spec)
    payload: Dict[str, Any] = {"command": job.command, "surface": spec.to_dict(), **class_payload(value)}
    lines = class_text("[Char]", payload)
    if job.verify:
        payload["verified"] = True
        lines.append("verified: display and strata routes agree, Rep closed formula agrees with the pipeline")
    return CommandResult(job.command, payload, lines)


def _tube_operator(job: JobSpec) -> TubeOperator:
    reduced = not job.unreduced
    if job.tube is TubeKind.SEMISIMPLE:
        return semisimple_tube(job.eigenvalues()[0], reduced=reduced)
    data = load_operator_data(job.config().data_file)
    if job.tube is TubeKind.HANDLE:
        return handle_tube(reduced=reduced, data=data)
    return jordan_tube(1 if job.tube is TubeKind.JORDAN_PLUS else -1, reduced=reduced, data=data)


def tube_matrix(job: JobSpec) -> CommandResult:
    operator = _tube_operator(job)
    columns = {gen: operator.apply(ModuleElement.basis(gen)) for gen in CORE_ORDER}
    payload = {
        "command": job.command,
        "tube": operator.kind.value,
        "reduced": operator.reduced,
        "columns": {gen.value: element_to_json(image) for gen, image in columns.items()},
    }
    title = f"{operator.kind.value} tube ({'reduced' if operator.reduced else 'unreduced'}), rows = outputs"
    return CommandResult(job.command, payload, [title, frame_text(tube_frame(columns))])


def oracle_count(job: JobSpec) -> CommandResult:
    surface = job.residue_surface()
    config = job.config()
    data = load_operator_data(config.data_file) if job.compare else None
    results: List[Dict[str, Any]] = []
    lines: List[str] = []
    for p in job.primes:
        budget = WorkBudget(config.work_limit)
        if job.compare:
            comparison = compare_point_count(p, surface, data=data, budget=budget, strict=True)
            results.append(comparison.to_dict())
            verdict = "agree" if comparison.agree else "differ"
            lines.append(
                f"p={p}: |Rep| = {comparison.count}, class at q={p}: {comparison.predicted} "
                f"({verdict}, admissible={str(comparison.admissible).lower()})"
            )
        else:
            count = count_representation_points(p, surface, budget=budget)
            results.append({"prime": p, "surface": surface.to_dict(), "count": count})
            lines.append(f"p={p}: |Rep| = {count}")
        logger.info("oracle-count finished p=%d", p)
    return CommandResult(job.command, {"command": job.command, "results": results}, lines)


def fit_operators(job: JobSpec) -> CommandResult:
    config = job.config()
    operators = refit_operators(config.data_file, n_jobs=config.n_jobs, cache_dir=job.cache_dir, config=config)
    summary = [
        {
            "kind": fitted.kind.value,
            "primes": list(fitted.primes),
            "held_out": list(fitted.held_out),
            "checksum": fitted.checksum,
        }
        for fitted in operators
    ]
    lines = [f"wrote {config.data_file}"]
    lines.extend(f"{item['kind']}: primes {item['primes']} held out {item['held_out']}" for item in summary)
    return CommandResult(job.command, {"command": job.command, "data_file": str(config.data_file), "operators": summary}, lines)


def verify(job: JobSpec) -> CommandResult:
    config = job.config()
    checks = run_acceptance_suite(load_operator_data(config.data_file), config=config)
    records = checks_to_dicts(checks)
    failed = [record["name"] for record in records if not record["passed"]]
    payload: Dict[str, Any] = {"command": job.command, "passed": not failed, "checks": records}
    lines = [frame_text(checks_frame(records), index=False)]
    status = 0
    if failed:
        error = VerificationFailed(f"{len(failed)} acceptance checks failed", details={"failed": failed})
        payload["error"] = error.to_dict()
        lines.append(f"{len(failed)} of {len(records)} checks FAILED")
        status = error.exit_status
    else:
        lines.append(f"all {len(records)} checks passed")
    return CommandResult(job.command, payload, lines, status)


HANDLERS: Dict[str, Callable[[JobSpec], CommandResult]] = {
    "compute-rep": compute_rep,
    "compute-char": compute_char,
    "tube-matrix": tube_matrix,
    "oracle-count": oracle_count,
    "fit-operators": fit_operators,
    "verify": verify,
}


def run_command(argv: Optional[Sequence[str]] = None, *, stream: Optional[TextIO] = None) -> int:
    """Parse, run and render one job; returns the process exit status."""
    out = stream or sys.stdout
    started = time.perf_counter()
    command = "unknown"
    try:
        job = parse_job(argv)
        command = job.command
        logger.info("Running %s", command)
        result = HANDLERS[command](job)
    except EngineError as exc:
        logger.info("%s failed with %s", command, exc.code)
        out.write(dump_json({"error": exc.to_dict()}) + "\n")
        return exc.exit_status
    except Exception:
        logger.exception("%s crashed", command)
        raise
    finally:
        record_command_runtime(command, time.perf_counter() - started)
    out.write(result.render(job.format))
    logger.info("Finished %s with status %d", command, result.status)
    return result.status


__all__ = ["CommandResult", "HANDLERS", "run_command"]
