"""Helpers shared by the subcommands."""

import argparse
import logging
import os
from typing import Optional

from traytransport.core.exceptions import ConfigError
from traytransport.models.run_config import RunConfig
from traytransport.services.trajectory_io_service import load_run_config

# Exit codes
EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_INFEASIBLE = 2
EXIT_VALIDATION = 3

logger = logging.getLogger(__name__)


def add_config_argument(parser: argparse.ArgumentParser, required: bool = True) -> None:
    parser.add_argument("--config", required=required, help="JSON run configuration")


def add_common_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--out", help="Output file (overrides the config output block)")
    parser.add_argument("--dt", type=float, help="Sampling period in seconds (overrides sample_dt_s)")


def read_config(args: argparse.Namespace) -> RunConfig:
    """Run configuration named by --config, or the defaults when none is given."""
    if getattr(args, "config", None):
        return load_run_config(args.config)
    return RunConfig()


def output_path(args: argparse.Namespace, configured: Optional[str], what: str) -> str:
    """
    Destination given by --out, falling back to the config.

    Raises:
        ConfigError: If neither names a file
    """
    path = getattr(args, "out", None) or configured
    if not path:
        raise ConfigError(f"No output path for the {what}: pass --out or set it in the config output block")
    return path


def sibling_path(path: str, suffix: str) -> str:
    """path with its extension replaced by suffix."""
    return os.path.splitext(path)[0] + suffix
