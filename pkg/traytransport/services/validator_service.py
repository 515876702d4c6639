"""
Independent trajectory audits.

The stability audit re-derives the pressure center from the torque balance
at every sample and never goes through the closed-form acceleration limit
the planner uses. Braking samples are audited in the mirrored frame, where
the line elevation, the tray pitch and the acceleration change sign, so
cop_offset always points at the edge the object would tip over.
"""

import logging
from typing import List, Optional

import numpy as np

from traytransport.core.config import ENDPOINT_TOL, LIMIT_SLACK, TOL_COP
from traytransport.models.limits import MotionLimits
from traytransport.models.physical import ObjectParams
from traytransport.models.reports import (
    ConstraintAudit,
    EndpointAudit,
    EndpointCheck,
    LimitCheck,
    StabilityReport,
    ValidationReport,
)
from traytransport.models.trajectory import Trajectory
from traytransport.services.physics_service import cop_offset_array

# Setup logging
logger = logging.getLogger(__name__)


def braking_mask(traj: Trajectory) -> np.ndarray:
    """Samples that belong to a braking phase."""
    return (traj.a < 0) | ((traj.a == 0) & (traj.pitch < 0))


def stability_audit(traj: Trajectory, obj: ObjectParams, tolerance: float = TOL_COP) -> StabilityReport:
    """
    Pressure-center offset and margin at every sample.

    Samples without normal contact force are reported in singular_times and
    count as violations; they carry a NaN offset.
    """
    theta = traj.request.theta
    mirrored = braking_mask(traj)
    sign = np.where(mirrored, -1.0, 1.0)

    offsets, singular = cop_offset_array(
        sign * traj.pitch, traj.omega, traj.alpha, sign * traj.a, sign * theta, obj
    )
    margin = np.where(singular, -obj.radius, obj.radius - np.abs(np.nan_to_num(offsets)))
    violations = np.flatnonzero((margin < -tolerance) | singular)

    worst = int(np.argmin(margin)) if margin.size else None
    first_violation_t: Optional[float] = None
    if violations.size:
        first_violation_t = float(traj.t[violations[0]])
        logger.warning(
            f"Stability violated at t={first_violation_t:.6f} s "
            f"({violations.size} of {traj.n_samples} samples)"
        )

    return StabilityReport(
        cop_offset=offsets.tolist(),
        margin=margin.tolist(),
        min_margin=float(margin[worst]) if worst is not None else obj.radius,
        min_margin_t=float(traj.t[worst]) if worst is not None else None,
        stable=violations.size == 0,
        first_violation_t=first_violation_t,
        singular_times=traj.t[singular].tolist(),
        tolerance=tolerance,
    )


def _limit_check(name: str, values: np.ndarray, times: np.ndarray, limit: float, slack: float) -> LimitCheck:
    if values.size == 0:
        return LimitCheck(name=name, observed=0.0, limit=limit, slack=slack, passed=True)
    worst = int(np.argmax(values))
    observed = float(values[worst])
    return LimitCheck(
        name=name,
        observed=observed,
        limit=limit,
        slack=slack,
        passed=observed <= limit + slack,
        worst_t=float(times[worst]),
    )


def translational_jerk(traj: Trajectory) -> np.ndarray:
    """Central finite differences of the acceleration at interior samples."""
    dt = traj.request.sample_dt
    return (traj.a[2:] - traj.a[:-2]) / (2.0 * dt)


def audit_constraints(traj: Trajectory, limits: MotionLimits) -> ConstraintAudit:
    """
    Worst observed value of every motion limit.

    Translational jerk carries a slack of 10·a_max·dt for the corners of
    a(t) at phase boundaries; every other limit uses LIMIT_SLACK.
    """
    t = traj.t
    jerk_slack = 10.0 * limits.a_max * traj.request.sample_dt
    checks: List[LimitCheck] = [
        _limit_check("j_max", np.abs(translational_jerk(traj)), t[1:-1], limits.j_max, jerk_slack),
        _limit_check("a_max", np.abs(traj.a), t, limits.a_max, LIMIT_SLACK),
        _limit_check("v_max", traj.v, t, limits.v_max, LIMIT_SLACK),
        _limit_check("v_min", -traj.v, t, 0.0, LIMIT_SLACK),
        _limit_check("j_rm", np.abs(traj.jerk_rot), t, limits.j_rm, LIMIT_SLACK),
        _limit_check("alpha_rm", np.abs(traj.alpha), t, limits.alpha_rm, LIMIT_SLACK),
        _limit_check("omega_rm", np.abs(traj.omega), t, limits.omega_rm, LIMIT_SLACK),
    ]
    audit = ConstraintAudit(checks=checks)
    if not audit.passed:
        logger.warning(f"Constraint audit failed: {', '.join(audit.failures)}")
    return audit


def endpoint_audit(traj: Trajectory, tolerance: float = ENDPOINT_TOL) -> EndpointAudit:
    """
    Final displacement equals the requested distance, the motion ends at rest
    with a level tray, and no sample passes the target.
    """
    p_t = traj.request.target_distance

    def check(name: str, observed: float, expected: float) -> EndpointCheck:
        return EndpointCheck(
            name=name,
            observed=observed,
            expected=expected,
            tolerance=tolerance,
            passed=abs(observed - expected) <= tolerance,
        )

    overshoot = max(float(np.max(traj.s)) - p_t, 0.0)
    checks = [
        check("displacement", float(traj.s[-1]), p_t),
        check("overshoot", overshoot, 0.0),
        check("terminal_velocity", float(traj.v[-1]), 0.0),
        check("terminal_acceleration", float(traj.a[-1]), 0.0),
        check("terminal_omega", float(traj.omega[-1]), 0.0),
        check("terminal_alpha", float(traj.alpha[-1]), 0.0),
        check("terminal_phi", float(traj.phi[-1]), 0.0),
    ]
    audit = EndpointAudit(checks=checks)
    if not audit.passed:
        logger.warning(f"Endpoint audit failed: {', '.join(audit.failures)}")
    return audit


def validate(traj: Trajectory, obj: ObjectParams, limits: MotionLimits) -> ValidationReport:
    """Run all three audits."""
    return ValidationReport(
        stability=stability_audit(traj, obj),
        constraints=audit_constraints(traj, limits),
        endpoint=endpoint_audit(traj),
    )
