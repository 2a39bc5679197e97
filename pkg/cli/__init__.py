"""Command-line front end: job parsing, command handlers and renderers."""

from cli.commands import HANDLERS, CommandResult, run_command
from cli.errors import UsageError, VerificationFailed
from cli.jobs import COMMANDS, JobSpec, build_parser, parse_job

__all__ = [
    "COMMANDS",
    "CommandResult",
    "HANDLERS",
    "JobSpec",
    "UsageError",
    "VerificationFailed",
    "build_parser",
    "parse_job",
    "run_command",
]
