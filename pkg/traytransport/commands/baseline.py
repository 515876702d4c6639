import argparse
import logging

from traytransport.commands.common import (
    EXIT_OK,
    add_common_arguments,
    add_config_argument,
    output_path,
    read_config,
    sibling_path,
)
from traytransport.services.planner_service import plan_baseline, summarize
from traytransport.services.trajectory_io_service import (
    request_from_config,
    write_model_json,
    write_trajectory_csv,
)

logger = logging.getLogger(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("baseline", help="Plan the level-tray S-curve trajectory")
    add_config_argument(parser)
    add_common_arguments(parser)
    parser.set_defaults(func=cmd_baseline)


def cmd_baseline(args: argparse.Namespace) -> int:
    """Same outputs as plan, for the trajectory without tray rotation."""
    config = read_config(args)
    request = request_from_config(config, args.dt)
    csv_path = output_path(args, config.output.trajectory_csv, "trajectory")

    trajectory = plan_baseline(request)
    summary = summarize(trajectory)

    write_trajectory_csv(trajectory, csv_path)
    write_model_json(summary, config.output.summary_json or sibling_path(csv_path, ".summary.json"))

    print(f"t_total={summary.t_total:.6f} s (no rotation) -> {csv_path}")
    return EXIT_OK
