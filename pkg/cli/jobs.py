"""Job description shared by command-line flags and JSON job files."""
from __future__ import annotations

import argparse
import json
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional, Sequence

from pydantic import BaseModel, Field, ValidationError, field_validator, model_validator
from sympy import isprime

from cli.errors import UsageError
from eigen.syntax import parse_eigen_list
from eigen.values import EigenClass
from engine_config import EngineConfig
from ffcount.points import ResidueSurface
from kring.errors import EngineError
from operators.linear import TubeKind
from operators.surface import SurfaceSpec

COMMANDS = ("compute-rep", "compute-char", "tube-matrix", "oracle-count", "fit-operators", "verify")

Command = Literal["compute-rep", "compute-char", "tube-matrix", "oracle-count", "fit-operators", "verify"]

# argparse dest -> JobSpec field
_RENAMES = {"prime": "primes", "semisimple_trace": "semisimple_traces"}


class JobSpec(BaseModel):
    command: Command
    genus: int = Field(0, ge=0)
    jordan_plus: int = Field(0, ge=0)
    jordan_minus: int = Field(0, ge=0)
    minus_id: int = Field(0, ge=0)
    semisimple: List[str] = Field(default_factory=list)
    semisimple_traces: List[int] = Field(default_factory=list)
    primes: List[int] = Field(default_factory=list)
    work_limit: Optional[int] = Field(None, ge=1)
    data_file: Optional[Path] = None
    format: Literal["text", "json"] = "text"
    verify: bool = False
    compare: bool = False
    direct_jordan_minus: bool = False
    tube: Optional[TubeKind] = None
    unreduced: bool = False
    n_jobs: Optional[int] = Field(None, ge=1)
    cache_dir: Optional[Path] = None

    @field_validator("semisimple")
    @classmethod
    def _check_eigenvalues(cls, value: List[str]) -> List[str]:
        try:
            parse_eigen_list(value)
        except EngineError as exc:
            raise ValueError(str(exc)) from exc
        return value

    @field_validator("primes")
    @classmethod
    def _check_primes(cls, value: List[int]) -> List[int]:
        ceiling = EngineConfig.from_env().max_prime
        for p in value:
            if p < 3 or not isprime(p):
                raise ValueError(f"{p} is not an odd prime")
            if p > ceiling:
                raise ValueError(f"prime {p} exceeds the enumeration limit {ceiling}")
        return value

    @model_validator(mode="after")
    def _check_command_fields(self) -> "JobSpec":
        if self.command == "oracle-count" and not self.primes:
            raise ValueError("oracle-count needs at least one --prime")
        if self.command == "tube-matrix":
            if self.tube is None:
                raise ValueError("tube-matrix needs --tube")
            if self.tube is TubeKind.SEMISIMPLE and len(self.semisimple) != 1:
                raise ValueError("the semisimple tube takes exactly one --semisimple eigenvalue")
        return self

    def eigenvalues(self) -> List[EigenClass]:
        return parse_eigen_list(self.semisimple)

    def surface(self) -> SurfaceSpec:
        return SurfaceSpec(
            genus=self.genus,
            jordan_plus=self.jordan_plus,
            jordan_minus=self.jordan_minus,
            minus_id=self.minus_id,
            semisimple=tuple(self.eigenvalues()),
        )

    def residue_surface(self) -> ResidueSurface:
        return ResidueSurface(
            genus=self.genus,
            jordan_plus=self.jordan_plus,
            jordan_minus=self.jordan_minus,
            minus_id=self.minus_id,
            traces=tuple(self.semisimple_traces),
        )

    def config(self) -> EngineConfig:
        return EngineConfig.from_env().with_overrides(
            data_file=self.data_file,
            work_limit=self.work_limit,
            n_jobs=self.n_jobs,
        )


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message, details={"usage": self.format_usage().strip()})


def build_parser() -> argparse.ArgumentParser:
    # only flags given on the command line reach the namespace, so they can override a job file
    parser = _Parser(
        prog="charvar",
        description="Virtual classes of SL(2, C) parabolic representation and character varieties.",
        argument_default=argparse.SUPPRESS,
    )
    # JobSpec.command checks the name; argparse choices would reject the suppressed default
    parser.add_argument("command", nargs="?", metavar="COMMAND", help=f"One of {', '.join(COMMANDS)}")
    parser.add_argument("--job", type=Path, help="JSON job file with JobSpec fields")
    parser.add_argument("--genus", type=int, help="Genus of the surface")
    parser.add_argument("--jordan-plus", type=int, help="Punctures with holonomy in [J+]")
    parser.add_argument("--jordan-minus", type=int, help="Punctures with holonomy in [J-]")
    parser.add_argument("--minus-id", type=int, help="Punctures with holonomy -Id")
    parser.add_argument("--semisimple", action="append", help="Semisimple eigenvalue, e.g. rat:2 or sym:x1 (repeatable)")
    parser.add_argument("--semisimple-trace", type=int, action="append", help="Residue trace for oracle-count (repeatable)")
    parser.add_argument("--prime", type=int, action="append", help="Prime for oracle-count (repeatable)")
    parser.add_argument("--work-limit", type=int, help="Work estimate ceiling for point counting")
    parser.add_argument("--data-file", type=Path, help="Operator data file")
    parser.add_argument("--format", choices=["text", "json"], help="Output format")
    parser.add_argument("--verify", action="store_true", help="Cross-check the closed formula against the pipeline")
    parser.add_argument("--compare", action="store_true", help="Compare point counts with the class evaluated at p")
    parser.add_argument("--direct-jordan-minus", action="store_true", help="Apply [J-] tubes without holonomy reduction")
    parser.add_argument("--tube", choices=[kind.value for kind in TubeKind], help="Tube kind for tube-matrix")
    parser.add_argument("--unreduced", action="store_true", help="Show the unreduced tube matrix")
    parser.add_argument("--n-jobs", type=int, help="joblib workers for fit-operators")
    parser.add_argument("--cache-dir", type=Path, help="Per-prime table cache for fit-operators")
    return parser


def _read_job_file(path: Path) -> Dict[str, Any]:
    try:
        payload = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read job file {path}: {exc}", details={"path": str(path)}) from exc
    if not isinstance(payload, dict):
        raise UsageError("a job file holds one JSON object", details={"path": str(path)})
    return payload


def parse_job(argv: Optional[Sequence[str]] = None) -> JobSpec:
    """Flags override the fields of --job; the result is validated as a JobSpec."""
    namespace = vars(build_parser().parse_args(argv))
    fields: Dict[str, Any] = {}
    job_path = namespace.pop("job", None)
    if job_path is not None:
        fields.update(_read_job_file(job_path))
    for name, value in namespace.items():
        fields[_RENAMES.get(name, name)] = value
    if "command" not in fields:
        raise UsageError("no command given", details={"choices": list(COMMANDS)})
    try:
        return JobSpec.model_validate(fields)
    except ValidationError as exc:
        raise UsageError(
            "invalid job",
            details={"errors": exc.errors(include_url=False, include_context=False)},
        ) from exc
