"""
Tests for the seven-segment S-curve primitives.
"""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.integrate import cumulative_trapezoid

from traytransport.core.exceptions import InvalidParameterError
from traytransport.models.limits import MotionLimits, ProfileCaps
from traytransport.services.scurve_service import (
    plan_seven_segment,
    rotation_half_profile,
    sample_profile_array,
    sample_rotation,
    sample_rotation_array,
)

ROTATION_CAPS = MotionLimits.default().rotation_caps

caps_strategy = st.builds(
    ProfileCaps,
    jerk=st.floats(10.0, 1e4),
    accel=st.floats(0.1, 50.0),
    velocity=st.floats(0.05, 5.0),
)
distances = st.floats(1e-4, 10.0)


def _slack(cap):
    return 1e-9 * (1.0 + cap)


def test_zero_tilt_gives_empty_rotation():
    profile = rotation_half_profile(ROTATION_CAPS, 0.0)
    assert profile.t_a == 0.0
    assert len(profile.segments) == 7
    assert all(seg.duration == 0.0 for seg in profile.segments)
    state, jerk = sample_rotation(profile, 0.5)
    assert (state.phi, state.omega, state.alpha, jerk) == (0.0, 0.0, 0.0, 0.0)


def test_full_rotation_breakpoints():
    """Large tilt reaches both the α and ω plateaus."""
    profile = rotation_half_profile(ROTATION_CAPS, 1.0)
    t1, t2, t3, t4, t5, t6, t_a = profile.breakpoints
    assert t1 == pytest.approx(9.0 / 6000.0, rel=1e-12)
    assert t2 - t1 == pytest.approx(2.61 / 9.0 - 9.0 / 6000.0, rel=1e-9)
    assert t4 > t3
    assert t_a == pytest.approx(profile.profile.total_time)
    assert [seg.jerk for seg in profile.segments] == [6000.0, 0.0, -6000.0, 0.0, -6000.0, 0.0, 6000.0]


def test_rotation_states():
    profile = rotation_half_profile(ROTATION_CAPS, 1.0)
    t1, t2 = profile.breakpoints[:2]

    state, _ = sample_rotation(profile, 0.0)
    assert (state.phi, state.omega, state.alpha) == (0.0, 0.0, 0.0)

    state, jerk = sample_rotation(profile, 0.5 * (t1 + t2))
    assert state.alpha == pytest.approx(9.0, rel=1e-9)
    assert jerk == 0.0

    state, jerk = sample_rotation(profile, profile.t_a + 1.0)
    assert (state.phi, state.omega, state.alpha, jerk) == (1.0, 0.0, 0.0, 0.0)


@settings(max_examples=200, deadline=None)
@given(phi_rm=st.floats(1e-6, 1.5))
def test_rotation_reaches_terminal_tilt(phi_rm):
    profile = rotation_half_profile(ROTATION_CAPS, phi_rm)
    _, p0, v0, a0 = profile.profile.knots[-1]
    assert p0 == pytest.approx(phi_rm, abs=1e-9)
    assert v0 == pytest.approx(0.0, abs=1e-9)
    assert a0 == pytest.approx(0.0, abs=1e-9)


@settings(max_examples=200, deadline=None)
@given(phi_rm=st.floats(1e-6, 1.5))
def test_rotation_is_monotone_within_rate_limits(phi_rm):
    profile = rotation_half_profile(ROTATION_CAPS, phi_rm)
    times = np.linspace(0.0, profile.t_a, 400)
    phi, omega, alpha, jerk = sample_rotation_array(profile, times)
    assert np.all(np.diff(phi) >= -1e-12)
    assert np.all(omega >= -1e-9)
    assert np.all(omega <= ROTATION_CAPS.velocity + _slack(ROTATION_CAPS.velocity))
    assert np.all(np.abs(alpha) <= ROTATION_CAPS.accel + _slack(ROTATION_CAPS.accel))
    assert np.all(np.abs(jerk) <= ROTATION_CAPS.jerk)


def test_negative_tilt_is_rejected():
    with pytest.raises(InvalidParameterError):
        rotation_half_profile(ROTATION_CAPS, -0.1)


@pytest.mark.parametrize("distance", [0.0, -1.0])
def test_non_positive_distance_is_rejected(distance):
    caps = MotionLimits.default().translation_caps
    with pytest.raises(InvalidParameterError):
        plan_seven_segment(distance, caps)


@settings(max_examples=100, deadline=None)
@given(distance=distances, caps=caps_strategy)
def test_profile_covers_distance(distance, caps):
    profile = plan_seven_segment(distance, caps)
    assert profile.knots[-1][1] == pytest.approx(distance, abs=1e-9, rel=1e-12)
    assert profile.knots[-1][2] == pytest.approx(0.0, abs=1e-9)

    # Numeric integration of the sampled velocity
    times = np.linspace(0.0, profile.total_time, 20001)
    _, v, _, _ = sample_profile_array(profile, times)
    p = cumulative_trapezoid(v, times, initial=0.0)
    step = times[1] - times[0]
    assert abs(p[-1] - distance) <= caps.accel * step * step + 1e-9


@settings(max_examples=1000, deadline=None)
@given(distance=distances, caps=caps_strategy)
def test_profile_respects_caps(distance, caps):
    profile = plan_seven_segment(distance, caps)
    times = np.linspace(0.0, profile.total_time, 300)
    _, v, a, j = sample_profile_array(profile, times)
    assert np.all(np.abs(j) <= caps.jerk + _slack(caps.jerk))
    assert np.all(np.abs(a) <= caps.accel + _slack(caps.accel))
    assert np.all(v <= caps.velocity + _slack(caps.velocity))
    assert np.all(v >= -_slack(caps.velocity))


def test_long_move_cruises_at_velocity_cap():
    caps = MotionLimits.default().translation_caps
    profile = plan_seven_segment(100.0, caps)
    assert profile.peak_velocity == caps.velocity
    assert profile.segments[3].duration > 0


def test_planning_is_deterministic():
    caps = MotionLimits.default().translation_caps
    assert plan_seven_segment(0.37, caps) == plan_seven_segment(0.37, caps)


@settings(max_examples=200, deadline=None)
@given(
    distance=distances,
    caps=caps_strategy,
    which=st.sampled_from(["jerk", "accel", "velocity"]),
    factor=st.floats(0.1, 1.0),
)
def test_tighter_cap_never_speeds_up(distance, caps, which, factor):
    tighter = caps.model_copy(update={which: getattr(caps, which) * factor})
    slower = plan_seven_segment(distance, tighter).total_time
    assert slower >= plan_seven_segment(distance, caps).total_time * (1 - 1e-12)


def test_profile_is_continuous_across_breakpoints():
    caps = MotionLimits.default().translation_caps
    profile = plan_seven_segment(0.5, caps)
    for knot in profile.knots[1:-1]:
        t = knot[0]
        before = sample_profile_array(profile, np.array([t - 1e-9]))
        after = sample_profile_array(profile, np.array([t + 1e-9]))
        for k in range(3):
            assert before[k][0] == pytest.approx(after[k][0], abs=1e-4)
