import argparse
import logging
import sys

from traytransport.commands.common import EXIT_OK, add_common_arguments, add_config_argument, read_config
from traytransport.core.config import DEFAULT_SWEEP_GRID
from traytransport.services.planner_service import efficiency_sweep, parse_grid
from traytransport.services.trajectory_io_service import (
    limits_from_block,
    object_from_block,
    sweep_rows,
    write_sweep_csv,
)

logger = logging.getLogger(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("sweep", help="Map the time improvement over a grid of targets")
    add_config_argument(parser, required=False)
    add_common_arguments(parser)
    parser.add_argument("--grid", help=f"x0:x1:n,y0:y1:n in meters (default {DEFAULT_SWEEP_GRID})")
    parser.add_argument("--workers", type=int, help="Worker processes (default TRAYTRANSPORT_SWEEP_WORKERS)")
    parser.set_defaults(func=cmd_sweep)


def cmd_sweep(args: argparse.Namespace) -> int:
    """
    Rows (x, y, t_rot, t_norot, improvement) with x horizontal and y
    vertical, written as CSV to --out or printed.
    """
    config = read_config(args)
    (x0, x1, nx), (y0, y1, ny) = parse_grid(args.grid or config.grid or DEFAULT_SWEEP_GRID)
    dt = args.dt if args.dt is not None else config.sample_dt_s

    result = efficiency_sweep(
        (x0, x1),
        (y0, y1),
        (nx, ny),
        object_from_block(config.object),
        limits_from_block(config.limits),
        dt=dt,
        workers=args.workers,
    )

    if args.out:
        write_sweep_csv(result.rows, args.out)
        print(f"max improvement={result.max_improvement:.6f} -> {args.out}")
    else:
        for row in sweep_rows(result.rows):
            sys.stdout.write(",".join(row) + "\n")
    return EXIT_OK
