import argparse
import logging

from traytransport.commands.common import (
    EXIT_OK,
    EXIT_VALIDATION,
    add_config_argument,
    read_config,
)
from traytransport.services.trajectory_io_service import (
    limits_from_block,
    object_from_block,
    read_trajectory_csv,
    request_from_config,
    write_model_json,
)
from traytransport.services.validator_service import validate

logger = logging.getLogger(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("validate", help="Audit a trajectory CSV")
    add_config_argument(parser)
    parser.add_argument("--trajectory", required=True, help="Trajectory CSV written by plan or baseline")
    parser.add_argument("--out", help="Report JSON (overrides output.report_json)")
    parser.set_defaults(func=cmd_validate)


def cmd_validate(args: argparse.Namespace) -> int:
    """
    Run the stability, limit and endpoint audits and print one verdict per
    check. Exits with EXIT_VALIDATION when any audit fails.
    """
    config = read_config(args)
    request = request_from_config(config)
    trajectory = read_trajectory_csv(args.trajectory, request)

    report = validate(trajectory, object_from_block(config.object), limits_from_block(config.limits))

    stability = report.stability
    if stability.stable:
        print(f"stability: PASS (min margin {stability.min_margin:.3e} m at t={stability.min_margin_t})")
    else:
        print(f"stability: FAIL first violation at t={stability.first_violation_t}")
    for check in report.constraints.checks:
        verdict = "PASS" if check.passed else "FAIL"
        print(f"{check.name}: {verdict} (observed {check.observed:.6g}, limit {check.limit:.6g}, t={check.worst_t})")
    for check in report.endpoint.checks:
        verdict = "PASS" if check.passed else "FAIL"
        print(f"{check.name}: {verdict} (observed {check.observed:.6g}, expected {check.expected:.6g})")

    path = args.out or config.output.report_json
    if path:
        write_model_json(report, path)

    if not report.passed:
        logger.error("Trajectory failed validation")
        return EXIT_VALIDATION
    return EXIT_OK
