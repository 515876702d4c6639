"""
Jerk-limited S-curve primitives.

Both the translational baseline and the tray rotation use the same symmetric
seven-segment rest-to-rest profile: jerk +j, 0, -j, 0, -j, 0, +j. Plateaus
collapse to zero duration when the move is too short to reach the
acceleration or velocity cap; every branch is solved in closed form.
"""

import logging
import math
from typing import List, Tuple

import numpy as np

from traytransport.core.exceptions import InvalidParameterError
from traytransport.models.limits import ProfileCaps
from traytransport.models.physical import TrayState
from traytransport.models.profile import JerkSegment, RotationProfile, ScalarProfile1D

# Setup logging
logger = logging.getLogger(__name__)


def _ramp_times(peak_velocity: float, caps: ProfileCaps) -> Tuple[float, float]:
    """Jerk-ramp and constant-acceleration durations to reach peak_velocity from rest."""
    if peak_velocity >= caps.accel * caps.accel / caps.jerk:
        return caps.accel / caps.jerk, peak_velocity / caps.accel - caps.accel / caps.jerk
    return math.sqrt(peak_velocity / caps.jerk), 0.0


def _peak_velocity_for(distance: float, caps: ProfileCaps) -> float:
    """Peak velocity of the profile without cruise that covers distance."""
    j, a = caps.jerk, caps.accel
    if distance >= 2.0 * a ** 3 / (j * j):
        # Acceleration plateau reached: v²/a + v·a/j = distance
        ratio = a / j
        return 0.5 * a * (-ratio + math.sqrt(ratio * ratio + 4.0 * distance / a))
    # Pure jerk ramps: distance = 2·v^(3/2)/sqrt(j)
    return (0.5 * distance * math.sqrt(j)) ** (2.0 / 3.0)


def integrate_segments(segments: List[JerkSegment]) -> List[Tuple[float, float, float, float]]:
    """(t, p, v, a) at every segment boundary, starting from rest at the origin."""
    t = p = v = a = 0.0
    knots = [(t, p, v, a)]
    for seg in segments:
        d, j = seg.duration, seg.jerk
        p += v * d + 0.5 * a * d * d + j * d ** 3 / 6.0
        v += a * d + 0.5 * j * d * d
        a += j * d
        t += d
        knots.append((t, p, v, a))
    return knots


def _build_profile(distance: float, caps: ProfileCaps) -> ScalarProfile1D:
    if distance == 0:
        segments = [JerkSegment(duration=0.0, jerk=s * caps.jerk) for s in (1, 0, -1, 0, -1, 0, 1)]
        return ScalarProfile1D(
            segments=segments, knots=[(0.0, 0.0, 0.0, 0.0)] * 8,
            total_time=0.0, peak_velocity=0.0, distance=0.0,
        )

    tj, ta = _ramp_times(caps.velocity, caps)
    full_distance = caps.velocity * (2.0 * tj + ta)
    if distance >= full_distance:
        peak = caps.velocity
        cruise = (distance - full_distance) / caps.velocity
    else:
        peak = min(_peak_velocity_for(distance, caps), caps.velocity)
        tj, ta = _ramp_times(peak, caps)
        cruise = 0.0

    j = caps.jerk
    segments = [
        JerkSegment(duration=tj, jerk=j),
        JerkSegment(duration=max(ta, 0.0), jerk=0.0),
        JerkSegment(duration=tj, jerk=-j),
        JerkSegment(duration=cruise, jerk=0.0),
        JerkSegment(duration=tj, jerk=-j),
        JerkSegment(duration=max(ta, 0.0), jerk=0.0),
        JerkSegment(duration=tj, jerk=j),
    ]
    knots = integrate_segments(segments)
    return ScalarProfile1D(
        segments=segments,
        knots=knots,
        total_time=knots[-1][0],
        peak_velocity=peak,
        distance=distance,
    )


def plan_seven_segment(distance: float, caps: ProfileCaps) -> ScalarProfile1D:
    """
    Time-optimal rest-to-rest S-curve covering distance.

    Raises:
        InvalidParameterError: If distance is not positive
    """
    if not math.isfinite(distance) or distance <= 0:
        raise InvalidParameterError(f"Distance must be positive, got {distance}")
    return _build_profile(distance, caps)


def rotation_half_profile(caps: ProfileCaps, phi_rm: float) -> RotationProfile:
    """
    Tray rotation from level to phi_rm with zero boundary rates.

    Raises:
        InvalidParameterError: If phi_rm is negative
    """
    if not math.isfinite(phi_rm) or phi_rm < 0:
        raise InvalidParameterError(f"Terminal tilt must be non-negative, got {phi_rm}")
    profile = _build_profile(phi_rm, caps)
    breakpoints = tuple(knot[0] for knot in profile.knots[1:])
    return RotationProfile(profile=profile, breakpoints=breakpoints, terminal_tilt=phi_rm)


def sample_profile_array(profile: ScalarProfile1D, times: np.ndarray) -> Tuple[np.ndarray, ...]:
    """Closed-form (p, v, a, j) of a profile at the given times."""
    times = np.asarray(times, dtype=float)
    knots = np.asarray(profile.knots, dtype=float)
    jerks = np.array([seg.jerk for seg in profile.segments] + [0.0])

    # Index of the segment containing each time; past the end we sit on the final knot
    index = np.searchsorted(knots[:, 0], times, side="right") - 1
    index = np.clip(index, 0, len(knots) - 1)
    t0, p0, v0, a0 = knots[index].T
    j = jerks[index]
    d = np.maximum(times - t0, 0.0)

    after = times >= profile.total_time
    d = np.where(after, 0.0, d)
    j = np.where(after, 0.0, j)

    p = p0 + v0 * d + 0.5 * a0 * d * d + j * d ** 3 / 6.0
    v = v0 + a0 * d + 0.5 * j * d * d
    a = a0 + j * d
    p = np.where(after, profile.distance, p)
    v = np.where(after, 0.0, v)
    a = np.where(after, 0.0, a)
    return p, v, a, j


def sample_rotation_array(profile: RotationProfile, times: np.ndarray) -> Tuple[np.ndarray, ...]:
    """(φ, ω, α, j_r) of a rotation profile at the given times, signed by direction."""
    phi, omega, alpha, jerk = sample_profile_array(profile.profile, times)
    sign = profile.direction_sign
    return sign * phi, sign * omega, sign * alpha, sign * jerk


def sample_rotation(profile: RotationProfile, t: float) -> Tuple[TrayState, float]:
    """Tray state and rotational jerk at time t (t >= t_a holds the terminal tilt)."""
    phi, omega, alpha, jerk = sample_rotation_array(profile, np.array([max(t, 0.0)]))
    return TrayState(phi=float(phi[0]), omega=float(omega[0]), alpha=float(alpha[0])), float(jerk[0])
