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
from traytransport.services.planner_service import assemble_trajectory, summarize
from traytransport.services.trajectory_io_service import (
    request_from_config,
    write_model_json,
    write_trajectory_csv,
)

logger = logging.getLogger(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("plan", help="Plan a transport trajectory with tray rotation")
    add_config_argument(parser)
    add_common_arguments(parser)
    parser.set_defaults(func=cmd_plan)


def cmd_plan(args: argparse.Namespace) -> int:
    """
    Plan with tray rotation and write the trajectory CSV plus a summary JSON.
    """
    config = read_config(args)
    request = request_from_config(config, args.dt)
    csv_path = output_path(args, config.output.trajectory_csv, "trajectory")

    trajectory = assemble_trajectory(request)
    summary = summarize(trajectory)

    write_trajectory_csv(trajectory, csv_path)
    summary_path = config.output.summary_json or sibling_path(csv_path, ".summary.json")
    write_model_json(summary, summary_path)

    print(f"t_total={summary.t_total:.6f} s phi_rm={summary.phi_rm_acc:.6f} rad -> {csv_path}")
    return EXIT_OK
