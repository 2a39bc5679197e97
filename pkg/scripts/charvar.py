"""Command entry point: python -m scripts.charvar <command> [flags], or with --job job.json."""
from __future__ import annotations

import argparse
import logging
import os
import sys
from typing import List, Optional, Tuple

from cli.commands import run_command


def parse_args(argv: Optional[List[str]] = None) -> Tuple[argparse.Namespace, List[str]]:
    """Split off the logging flag; everything else belongs to the job."""
    parser = argparse.ArgumentParser(description="Run a charvar job.", add_help=False)
    parser.add_argument("--log-level", default=os.getenv("CHARVAR_LOG_LEVEL", "WARNING"), help="Logging level for stderr")
    return parser.parse_known_args(argv)


def main(argv: Optional[List[str]] = None) -> int:
    args, remaining = parse_args(argv)
    logging.basicConfig(
        level=args.log_level.upper(),
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    return run_command(remaining)


if __name__ == "__main__":
    sys.exit(main())
