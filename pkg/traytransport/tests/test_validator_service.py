"""
Tests for the trajectory audits.
"""

import math

import numpy as np
import pytest

from traytransport.models.trajectory import PlanRequest
from traytransport.services import validator_service
from traytransport.services.planner_service import assemble_trajectory, plan_baseline
from traytransport.services.validator_service import (
    audit_constraints,
    braking_mask,
    endpoint_audit,
    stability_audit,
    translational_jerk,
    validate,
)


@pytest.fixture
def planned(request_pi8):
    return assemble_trajectory(request_pi8)


def test_planned_trajectory_passes_every_audit(planned, cylinder, limits):
    report = validate(planned, cylinder, limits)
    assert report.passed
    assert report.stability.singular_times == []
    assert len(report.stability.cop_offset) == planned.n_samples
    assert report.stability.tolerance == 1e-4
    assert set(check.name for check in report.constraints.checks) >= {
        "j_max", "a_max", "v_max", "j_rm", "alpha_rm", "omega_rm",
    }


def test_stability_audit_never_uses_the_closed_form_limit(planned, cylinder, monkeypatch):
    """The audit must stand on the torque balance alone."""
    import traytransport.services.physics_service as physics_service

    def forbidden(*args, **kwargs):
        raise AssertionError("closed-form limit called by the audit")

    monkeypatch.setattr(physics_service, "max_translational_accel", forbidden)
    monkeypatch.setattr(physics_service, "tipping_accel_array", forbidden)
    assert stability_audit(planned, cylinder).stable
    assert not hasattr(validator_service, "max_translational_accel")


def test_halved_cap_leaves_half_the_radius(wide_cylinder, limits):
    """On a level line the offset is a·h/(2g), so half the static cap sits at r/2."""
    static_cap = wide_cylinder.radius * 9.81 / (wide_cylinder.height / 2)
    halved = limits.model_copy(update={"a_max": static_cap / 2})
    request = PlanRequest(target_distance=0.5, theta=0.0, object=wide_cylinder, limits=halved)
    report = stability_audit(plan_baseline(request), wide_cylinder)
    assert report.stable
    assert report.min_margin == pytest.approx(wide_cylinder.radius / 2, rel=1e-2)


def _binding_accel_sample(trajectory, obj):
    """Accelerating sample with the smallest stability margin."""
    margin = np.array(stability_audit(trajectory, obj).margin)
    margin[trajectory.a <= 0] = np.inf
    return int(np.argmin(margin))


def test_doubled_sample_is_detected(planned, cylinder):
    binding = _binding_accel_sample(planned, cylinder)
    a = planned.a.copy()
    a[binding] *= 2.0

    tampered = stability_audit(planned.with_columns(a=a), cylinder)
    assert not tampered.stable
    assert tampered.first_violation_t == pytest.approx(planned.t[binding])


def test_small_bump_at_binding_time_is_detected(planned, cylinder, limits):
    binding = _binding_accel_sample(planned, cylinder)
    a = planned.a.copy()
    a[binding] += 0.1 * limits.a_max
    bumped = planned.with_columns(a=a)
    assert not (stability_audit(bumped, cylinder).stable and audit_constraints(bumped, limits).passed)


def test_braking_samples_use_mirrored_frame(planned, cylinder):
    braking = braking_mask(planned)
    assert np.all(planned.a[braking] <= 0)
    assert np.any(braking)
    report = stability_audit(planned, cylinder)
    offsets = np.array(report.cop_offset)
    # Braking pushes the object toward the leading edge, which is the trailing
    # edge of the mirrored motion
    assert np.max(offsets[braking]) > 0.5 * cylinder.radius


def test_reduced_acceleration_limit_fails(cylinder, limits):
    planned = assemble_trajectory(
        PlanRequest(target_distance=0.5, theta=0.0, object=cylinder, limits=limits)
    )
    peak = float(np.max(np.abs(planned.a)))
    audit = audit_constraints(planned, limits.model_copy(update={"a_max": 0.9 * peak}))
    assert not audit.passed
    assert "a_max" in audit.failures
    check = audit.check("a_max")
    assert check.observed == pytest.approx(peak)
    assert 0.0 < check.worst_t <= planned.t_acc


def test_jerk_is_audited_by_central_differences(planned, limits):
    jerk = translational_jerk(planned)
    assert jerk.shape[0] == planned.n_samples - 2
    check = audit_constraints(planned, limits).check("j_max")
    assert check.slack == pytest.approx(10 * limits.a_max * planned.request.sample_dt)
    assert check.observed == pytest.approx(float(np.max(np.abs(jerk))))


def test_motionless_trajectory_passes_constraints(limits):
    from traytransport.services.physics_service import make_cylinder

    obj = make_cylinder(1.0, 0.004, 0.2)
    traj = assemble_trajectory(PlanRequest(target_distance=1e-8, theta=0.0, object=obj, limits=limits))
    assert audit_constraints(traj, limits).passed


def test_truncated_trajectory_fails_on_terminal_velocity(planned):
    audit = endpoint_audit(planned.truncated(planned.n_samples - 1))
    assert not audit.passed
    assert "terminal_velocity" in audit.failures


def test_target_mismatch_fails_on_displacement(planned):
    echoed = planned.model_copy(
        update={"request": planned.request.model_copy(update={"target_distance": 0.6})}
    )
    audit = endpoint_audit(echoed)
    assert audit.failures == ["displacement"]


def test_overshoot_is_detected(planned):
    s = planned.s.copy()
    s[len(s) // 2 :] = s[len(s) // 2 :] + 1e-3
    s[-1] = planned.s[-1]
    audit = endpoint_audit(planned.with_columns(s=s))
    assert "overshoot" in audit.failures
    assert "displacement" not in audit.failures


def test_singular_samples_are_reported_not_raised(cylinder, limits):
    """Free fall along a vertical line unloads the tray."""
    slow = limits.model_copy(update={"a_max": 5.0})
    request = PlanRequest(target_distance=0.3, theta=-math.pi / 2, object=cylinder, limits=slow)
    traj = plan_baseline(request)
    a = traj.a.copy()
    a[5] = 9.81
    report = stability_audit(traj.with_columns(a=a), cylinder)
    assert not report.stable
    assert report.singular_times == [pytest.approx(traj.t[5])]


def test_offsets_on_spinning_samples_zero_the_torque_balance(planned, cylinder):
    """The audited offset while the tray rotates must satisfy the moment balance itself."""
    from traytransport.models.physical import TrayState
    from traytransport.services.physics_service import torque_residual

    offsets = np.array(stability_audit(planned, cylinder).cop_offset)
    spinning = np.flatnonzero(
        (np.abs(planned.omega) > 0.1) & (planned.a > 0) & (np.abs(offsets) < cylinder.radius)
    )
    assert spinning.size > 10
    for i in spinning:
        tray = TrayState(
            phi=float(planned.pitch[i]), omega=float(planned.omega[i]), alpha=float(planned.alpha[i])
        )
        theta = planned.request.theta
        residual = torque_residual(tray, float(planned.a[i]), theta, float(offsets[i]), cylinder)
        assert residual == pytest.approx(0.0, abs=1e-9)
