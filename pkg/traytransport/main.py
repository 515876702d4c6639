import argparse
import logging
import sys
from typing import List, Optional

from dotenv import load_dotenv
from pydantic import ValidationError

from traytransport import __version__
from traytransport.commands import baseline, compare, plan, sweep, validate
from traytransport.commands.common import EXIT_CONFIG, EXIT_INFEASIBLE
from traytransport.core.config import settings
from traytransport.core.exceptions import (
    ConfigError,
    InfeasibleDistanceError,
    InfeasiblePhaseError,
    InvalidParameterError,
    TrajectoryFormatError,
    TrayTransportError,
)
from traytransport.core.logging_config import configure_logging

# Get logger
logger = logging.getLogger(__name__)

# Exceptions mapped to exit codes, checked in order
ERROR_EXIT_CODES = (
    (ConfigError, EXIT_CONFIG),
    (InvalidParameterError, EXIT_CONFIG),
    (TrajectoryFormatError, EXIT_CONFIG),
    (ValidationError, EXIT_CONFIG),
    (InfeasibleDistanceError, EXIT_INFEASIBLE),
    (InfeasiblePhaseError, EXIT_INFEASIBLE),
    (TrayTransportError, EXIT_INFEASIBLE),
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="traytransport",
        description=f"{settings.PROJECT_NAME}: time-optimal straight-line transport on a tilting tray",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--log-level", help="Overrides TRAYTRANSPORT_LOG_LEVEL")

    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in (plan, baseline, compare, sweep, validate):
        command.register(subparsers)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    # Load environment variables
    load_dotenv()

    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(level=args.log_level)

    try:
        return args.func(args)
    except Exception as e:
        for error_class, code in ERROR_EXIT_CODES:
            if isinstance(e, error_class):
                logger.error(f"{args.command} failed: {e}")
                print(f"error: {e}", file=sys.stderr)
                return code
        raise


if __name__ == "__main__":
    sys.exit(main())
