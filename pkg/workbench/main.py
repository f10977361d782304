"""
Command-line entry point for the gadget workbench.

Artifacts go to standard output (or --output files); logs and errors go to
standard error. Exit codes: 0 success, 1 usage or input error, 2 failed
verification, 3 nothing found or not decodable.
"""
import argparse
import logging
import sys
from typing import List, Optional

from pydantic import ValidationError

from workbench import __version__
from workbench.commands import analysis, gadgets, verification
from workbench.commands.common import ExitCode
from workbench.services.errors import DecodeError, WorkbenchError
from workbench.services.settings import get_settings

logger = logging.getLogger(__name__)


class WorkbenchArgumentParser(argparse.ArgumentParser):
    """Usage errors exit with 1; 2 is reserved for failed verification."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(ExitCode.USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = WorkbenchArgumentParser(
        prog="workbench",
        description="Build and verify bridge-free and short-cycle-free gadget families",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--log-level", help="override WORKBENCH_LOG_LEVEL")
    subparsers = parser.add_subparsers(dest="verb", required=True)
    gadgets.register(subparsers)
    analysis.register(subparsers)
    verification.register(subparsers)
    return parser


def configure_logging(level: str) -> None:
    logging.basicConfig(
        level=level,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )
    logging.getLogger().setLevel(level)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        settings = get_settings()
        configure_logging((args.log_level or settings.workbench_log_level).upper())
    except (ValidationError, ValueError) as exc:
        print(f"error: invalid configuration: {exc}", file=sys.stderr)
        return ExitCode.USAGE

    logger.debug("Running %s", args.verb)
    try:
        return int(args.handler(args))
    except DecodeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ExitCode.NOT_FOUND
    except WorkbenchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ExitCode.USAGE
    except ValidationError as exc:
        print(f"error: invalid input: {exc.errors()[0]['msg']}", file=sys.stderr)
        return ExitCode.USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ExitCode.USAGE


if __name__ == "__main__":
    sys.exit(main())
