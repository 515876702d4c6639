import argparse
import logging

from traytransport.commands.common import EXIT_OK, add_common_arguments, add_config_argument, read_config
from traytransport.services.planner_service import compare
from traytransport.services.trajectory_io_service import (
    object_from_block,
    request_from_config,
    write_model_json,
)

logger = logging.getLogger(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("compare", help="Compare transport time with and without rotation")
    add_config_argument(parser)
    add_common_arguments(parser)
    parser.set_defaults(func=cmd_compare)


def cmd_compare(args: argparse.Namespace) -> int:
    """
    Write the comparison record to --out or output.report_json, or print it
    when neither is set. A baseline_object block gives the level-tray arm its
    own cylinder.
    """
    config = read_config(args)
    request = request_from_config(config, args.dt)
    baseline_object = object_from_block(config.baseline_object) if config.baseline_object else None

    report = compare(request, baseline_object)

    path = args.out or config.output.report_json
    if path:
        write_model_json(report, path)
        print(f"improvement={report.improvement:.6f} -> {path}")
    else:
        print(report.model_dump_json(indent=2))
    return EXIT_OK
