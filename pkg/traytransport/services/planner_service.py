"""
Transport trajectory planner.

A rotation trajectory is built from sampled translational acceleration on the uniform
sample_dt grid; velocity and arc length are its cumulative trapezoidal
integrals, so the emitted columns are exactly self-consistent.

Acceleration phase (first half):
    [0, t_a]          tray follows the rotation S-curve, a(t) is the tipping
                      limit at the current tray state (clamped to a_max)
    [t_a, t_acc/2]    tray holds φ_rm, a holds the tipping limit at φ_rm
The second half is the time mirror of the first, which levels the tray again
and doubles the velocity gain. A forward/backward rate limiter at j_max·dt
keeps the acceleration jerk-limited and starting from zero; the half is then
scaled by λ ≤ 1 so the velocity at t_acc/2 is exactly half the target.

Braking is the time reverse of an acceleration phase planned for the
mirrored elevation -θ, with the tray tilted backward. The cruise between
the two runs at the phase velocity for a whole number of samples; the
sub-sample distance this overshoots is taken out by a shallow velocity dip
inside the cruise, so the peak velocity is never reduced.

The level-tray baseline is the closed-form seven-segment S-curve sampled on
the same grid.
"""

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, List, Optional, Sequence, Tuple, Union

import numpy as np
from pydantic import BaseModel
from scipy.integrate import cumulative_trapezoid, trapezoid

from traytransport.core.config import DEFAULT_OBJECT, PHI_CAP, PHI_FIT_TOL, settings
from traytransport.core.exceptions import (
    InfeasibleDistanceError,
    InfeasiblePhaseError,
    InvalidParameterError,
    TrayTransportError,
)
from traytransport.models.limits import MotionLimits
from traytransport.models.physical import ObjectParams
from traytransport.models.profile import RotationProfile
from traytransport.models.trajectory import (
    ComparisonReport,
    PhaseMarks,
    PlanRequest,
    SweepResult,
    SweepRow,
    Trajectory,
    TrajectorySummary,
)
from traytransport.services import physics_service
from traytransport.services.scurve_service import (
    plan_seven_segment,
    rotation_half_profile,
    sample_profile_array,
    sample_rotation_array,
)

# Setup logging
logger = logging.getLogger(__name__)

# Smallest velocity scale tried when shrinking a plan to fit a short distance
KAPPA_MIN = 1e-6
KAPPA_TOL = 1e-7
_MAX_HOLD_PASSES = 50
# Extra fraction of the hold checked against tipping over the leading edge
HOLD_SHORTFALL_SLACK = 0.01
# Depth of the cruise dip that trims the sub-sample distance remainder, as a
# fraction of the level-tray acceleration cap
CRUISE_DIP_FRACTION = 0.5
_DISTANCE_EPS = 1e-12


class AccelPhase(BaseModel):
    """
    Sampled acceleration phase, first sample at rest and last sample at the
    velocity target. Tray columns hold the tilt magnitude and its derivatives.
    """

    a: np.ndarray
    phi: np.ndarray
    omega: np.ndarray
    alpha: np.ndarray
    jerk_rot: np.ndarray
    phi_rm: float
    t_a: float
    midpoint: int
    scale: float
    velocity_target: float
    dt: float

    model_config = {"frozen": True, "arbitrary_types_allowed": True}

    @property
    def n_intervals(self) -> int:
        return 2 * self.midpoint

    @property
    def duration(self) -> float:
        return self.n_intervals * self.dt

    @property
    def velocity(self) -> np.ndarray:
        return cumulative_trapezoid(self.a, dx=self.dt, initial=0.0)

    @property
    def distance(self) -> float:
        return float(trapezoid(self.velocity, dx=self.dt))


# Tray sampler: times -> (phi, omega, alpha, jerk_rot), acceleration targets
TargetSampler = Callable[[np.ndarray], Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray, np.ndarray]]


def jerk_envelope(targets: np.ndarray, step: float) -> np.ndarray:
    """
    Largest sequence below targets that starts at zero and changes by at
    most step between neighbouring samples.
    """
    k = np.arange(targets.shape[0]) * step
    bounded = np.array(targets, dtype=float)
    bounded[0] = 0.0
    forward = k + np.minimum.accumulate(bounded - k)
    backward = np.minimum.accumulate((forward + k)[::-1])[::-1] - k
    return np.minimum(forward, backward)


def derive_accel_profile(
    rotation: RotationProfile,
    theta: float,
    obj: ObjectParams,
    limits: MotionLimits,
    dt: float,
    n_samples: Optional[int] = None,
) -> np.ndarray:
    """
    Tipping-limited acceleration clamped to a_max at t_k = k·dt.

    By default the grid covers [0, t_a]; n_samples extends it into the hold.
    """
    if n_samples is None:
        n_samples = int(math.floor(rotation.t_a / dt + 1e-9)) + 1
    times = np.arange(n_samples) * dt
    phi, omega, alpha, _ = sample_rotation_array(rotation, times)
    return physics_service.tipping_accel_array(phi, omega, alpha, theta, obj, limits.a_max)


def _rotation_sampler(
    rotation: RotationProfile, theta: float, obj: ObjectParams, limits: MotionLimits
) -> TargetSampler:
    def sampler(times: np.ndarray):
        phi, omega, alpha, jerk = sample_rotation_array(rotation, times)
        targets = physics_service.tipping_accel_array(phi, omega, alpha, theta, obj, limits.a_max)
        return phi, omega, alpha, jerk, targets

    return sampler


def _rotation_index(t_a: float, dt: float) -> int:
    """First grid index at or after t_a."""
    if t_a <= 0:
        return 0
    return int(math.ceil(t_a / dt - 1e-9))


def _velocity_at_rotation_end(
    rotation: RotationProfile, theta: float, obj: ObjectParams, limits: MotionLimits, dt: float
) -> float:
    n = _rotation_index(rotation.t_a, dt) + 1
    targets = derive_accel_profile(rotation, theta, obj, limits, dt, n_samples=n)
    a = jerk_envelope(targets, limits.j_max * dt)
    return float(trapezoid(a, dx=dt)) if n > 1 else 0.0


def _half_phase(
    sampler: TargetSampler,
    rotation_index: int,
    j_max: float,
    dt: float,
    velocity_target: float,
) -> Tuple[np.ndarray, ...]:
    """
    First half of an acceleration phase: samples 0..M with M >= rotation_index
    and velocity exactly velocity_target/2 at M.
    """
    half_target = 0.5 * velocity_target
    extra = 0
    for _ in range(_MAX_HOLD_PASSES):
        n = rotation_index + 1 + extra
        times = np.arange(n) * dt
        phi, omega, alpha, jerk, targets = sampler(times)
        a = jerk_envelope(targets, j_max * dt)
        v = cumulative_trapezoid(a, dx=dt, initial=0.0)
        if v[-1] >= half_target:
            break
        hold_level = max(a[-1], float(targets[-1]))
        if hold_level <= 0:
            raise InfeasiblePhaseError(
                "Tipping limit at the terminal tilt allows no forward acceleration"
            )
        extra += max(1, int(math.ceil((half_target - v[-1]) / (dt * hold_level))))
    else:
        raise InfeasiblePhaseError(f"Velocity target {velocity_target} not reachable")

    # Shortest half that still contains the whole rotation and the target velocity
    reached = int(np.argmax(v >= half_target))
    midpoint = max(rotation_index, reached)
    scale = half_target / v[midpoint] if v[midpoint] > 0 else 0.0
    cut = slice(0, midpoint + 1)
    return a[cut] * scale, phi[cut], omega[cut], alpha[cut], jerk[cut], midpoint, scale


def _mirror(first: np.ndarray, odd: bool = False) -> np.ndarray:
    tail = first[-2::-1]
    return np.concatenate([first, -tail if odd else tail])


def _accel_phase(
    sampler: TargetSampler,
    rotation_index: int,
    phi_rm: float,
    t_a: float,
    limits: MotionLimits,
    dt: float,
    velocity_target: float,
) -> AccelPhase:
    a, phi, omega, alpha, jerk, midpoint, scale = _half_phase(
        sampler, rotation_index, limits.j_max, dt, velocity_target
    )
    return AccelPhase(
        a=_mirror(a),
        phi=_mirror(np.abs(phi)),
        omega=_mirror(omega, odd=True),
        alpha=_mirror(alpha),
        jerk_rot=_mirror(jerk, odd=True),
        phi_rm=phi_rm,
        t_a=t_a,
        midpoint=midpoint,
        scale=scale,
        velocity_target=velocity_target,
        dt=dt,
    )


def _hold_keeps_leading_edge(
    phi_rm: float, hold: float, theta: float, obj: ObjectParams, dt: float, half_target: float
) -> bool:
    """
    The hold is scaled down by up to one sample of overshoot; at that lower
    acceleration the tilted object must not tip over the leading edge.
    """
    shortfall = min(1.0, hold * dt / half_target + HOLD_SHORTFALL_SLACK)
    offsets, singular = physics_service.cop_offset_array(
        phi_rm, 0.0, 0.0, (1.0 - shortfall) * hold, theta, obj
    )
    return not singular[0] and offsets[0] >= -obj.radius


def fit_phi_rm(
    theta: float,
    obj: ObjectParams,
    limits: MotionLimits,
    dt: float = 1e-3,
    velocity_target: Optional[float] = None,
) -> float:
    """
    Largest terminal tilt in [0, PHI_CAP] whose acceleration phase keeps the
    tipping limit at t_a within a_max, the velocity at t_a within half the
    velocity target, and the object off its leading edge when the hold is
    scaled down. Bisection to PHI_FIT_TOL.
    """
    half_target = 0.5 * (velocity_target if velocity_target is not None else limits.v_max)

    def feasible(phi_rm: float) -> bool:
        limit = physics_service.static_tipping_accel(theta, obj, phi=phi_rm)
        if not limit.constrained or limit.value > limits.a_max * (1 + 1e-12):
            return False
        if not _hold_keeps_leading_edge(phi_rm, limit.value, theta, obj, dt, half_target):
            return False
        rotation = rotation_half_profile(limits.rotation_caps, phi_rm)
        return _velocity_at_rotation_end(rotation, theta, obj, limits, dt) <= half_target

    if not feasible(PHI_FIT_TOL):
        return 0.0
    if feasible(PHI_CAP):
        return PHI_CAP

    low, high = PHI_FIT_TOL, PHI_CAP
    while high - low > PHI_FIT_TOL:
        mid = 0.5 * (low + high)
        if feasible(mid):
            low = mid
        else:
            high = mid
    logger.debug(f"Fitted phi_rm={low:.6f} rad for theta={theta:.4f}, half target {half_target:.4f}")
    return low


def _rotation_accel_phase(
    theta: float, obj: ObjectParams, limits: MotionLimits, dt: float, velocity_target: float
) -> AccelPhase:
    phi_rm = fit_phi_rm(theta, obj, limits, dt, velocity_target)
    rotation = rotation_half_profile(limits.rotation_caps, phi_rm)
    return _accel_phase(
        _rotation_sampler(rotation, theta, obj, limits),
        _rotation_index(rotation.t_a, dt),
        phi_rm,
        rotation.t_a,
        limits,
        dt,
        velocity_target,
    )


def build_accel_phase(
    phi_rm: float, request: PlanRequest, velocity_target: Optional[float] = None
) -> AccelPhase:
    """
    Acceleration phase for a given terminal tilt along the request's line.

    Raises:
        InfeasiblePhaseError: If the phase cannot reach the velocity target
    """
    limits = request.limits
    target = velocity_target if velocity_target is not None else limits.v_max
    rotation = rotation_half_profile(limits.rotation_caps, phi_rm)
    return _accel_phase(
        _rotation_sampler(rotation, request.theta, request.object, limits),
        _rotation_index(rotation.t_a, request.sample_dt),
        phi_rm,
        rotation.t_a,
        limits,
        request.sample_dt,
        target,
    )


def baseline_accel_cap(theta: float, obj: ObjectParams, limits: MotionLimits) -> float:
    """
    Acceleration cap of the level-tray S-curve: a_max and the static tipping
    limits for accelerating (+θ) and braking (mirrored, -θ).
    """
    cap = limits.a_max
    for elevation in (theta, -theta):
        cap = min(cap, physics_service.static_tipping_accel(elevation, obj).capped(limits.a_max))
    return cap


def final_displacement(a: np.ndarray, dt: float) -> float:
    """Arc length reached by integrating sampled acceleration twice from rest."""
    v = cumulative_trapezoid(a, dx=dt, initial=0.0)
    return float(trapezoid(v, dx=dt))


def cruise_dip(
    n_samples: int, start: int, cruise_steps: int, excess: float, dt: float, cap: float
) -> Optional[np.ndarray]:
    """
    Acceleration correction that removes `excess` meters inside the cruise.

    The velocity sinks below the cruise level over the m samples after
    `start` and recovers over the m samples before the cruise ends, so both
    acceleration phases and the peak velocity are left untouched. The lost
    distance is linear in the dip depth, which is solved for exactly.
    Returns None when no dip no deeper than cap fits in the cruise.
    """
    if excess <= 0 or cruise_steps < 4:
        return None
    room = (cruise_steps - 2) // 2
    end = start + cruise_steps
    # A unit dip of width m loses about m·(N - m)·dt²
    wanted = excess / (cap * dt * dt)
    m = 1
    while m < room and m * (cruise_steps - m) < wanted:
        m += 1
    while m <= room:
        shape = np.zeros(n_samples)
        shape[start + 1 : start + 1 + m] = -1.0
        shape[end - m : end] = 1.0
        depth = excess / -final_displacement(shape, dt)
        if depth <= cap:
            return depth * shape
        m += 1
    return None


PhasePair = Tuple[AccelPhase, AccelPhase]


def _assemble(request: PlanRequest, phases_for: Callable[[float], PhasePair], kind: str) -> Trajectory:
    limits = request.limits
    dt = request.sample_dt
    p_t = request.target_distance

    def displacement(kappa: float) -> Tuple[float, PhasePair]:
        pair = phases_for(kappa * limits.v_max)
        return pair[0].distance + pair[1].distance, pair

    kappa = 1.0
    covered, (acc, dec) = displacement(kappa)
    if covered > p_t:
        covered_min, pair_min = displacement(KAPPA_MIN)
        if covered_min > p_t:
            raise InfeasibleDistanceError(
                f"Target distance {p_t} m is shorter than the smallest plannable move {covered_min:.3e} m"
            )
        low, high = KAPPA_MIN, 1.0
        covered, (acc, dec) = covered_min, pair_min
        while high - low > KAPPA_TOL:
            mid = 0.5 * (low + high)
            d_mid, pair_mid = displacement(mid)
            if d_mid <= p_t:
                low, covered, (acc, dec) = mid, d_mid, pair_mid
            else:
                high = mid
        kappa = low
        logger.info(f"Short move: velocity scaled to {kappa:.6f} of v_max")

    velocity = kappa * limits.v_max
    gap = p_t - covered
    cruise_steps = int(math.ceil(gap / (velocity * dt) - 1e-9)) if gap > 0 else 0
    cruise_steps = max(cruise_steps, 0)

    braking = -dec.a[::-1]
    a = np.concatenate([acc.a, np.zeros(cruise_steps), braking[1:]])
    excess = final_displacement(a, dt) - p_t
    distance_scale = 1.0
    if abs(excess) > _DISTANCE_EPS:
        dip_cap = min(
            limits.j_max * dt,
            CRUISE_DIP_FRACTION * baseline_accel_cap(request.theta, request.object, limits),
        )
        dip = cruise_dip(a.shape[0], acc.n_intervals, cruise_steps, excess, dt, dip_cap)
        if dip is not None:
            a = a + dip
        else:
            # Cruise too short to hold the dip
            distance_scale = p_t / (p_t + excess)
            a = a * distance_scale
            logger.debug(f"Distance remainder {excess:.3e} m absorbed by scaling by {distance_scale:.9f}")

    def stitch(acc_col: np.ndarray, dec_col: np.ndarray) -> np.ndarray:
        return np.concatenate([acc_col, np.zeros(cruise_steps), dec_col[1:]])

    phi = stitch(acc.phi, dec.phi[::-1])
    omega = stitch(acc.omega, -dec.omega[::-1])
    alpha = stitch(acc.alpha, dec.alpha[::-1])
    jerk_rot = stitch(acc.jerk_rot, -dec.jerk_rot[::-1])
    pitch = stitch(acc.phi, -dec.phi[::-1])

    n = a.shape[0]
    t = np.arange(n) * dt
    v = cumulative_trapezoid(a, dx=dt, initial=0.0)
    s = cumulative_trapezoid(v, dx=dt, initial=0.0)
    direction = request.direction
    x0, y0, z0 = request.start

    t_acc = acc.n_intervals * dt
    t_cruise_end = (acc.n_intervals + cruise_steps) * dt
    marks = PhaseMarks(
        t_a=acc.t_a,
        t_acc=t_acc,
        t_cruise_end=t_cruise_end,
        t_b=dec.t_a,
        t_total=(n - 1) * dt,
    )

    columns = dict(
        t=t, phi=phi, omega=omega, alpha=alpha, jerk_rot=jerk_rot, a=a, v=v, s=s,
        x=x0 + s * direction[0], y=y0 + s * direction[1], z=z0 + s * direction[2], pitch=pitch,
    )
    for column in columns.values():
        column.setflags(write=False)

    trajectory = Trajectory(
        request=request,
        kind=kind,
        marks=marks,
        phi_rm_acc=acc.phi_rm,
        phi_rm_dec=dec.phi_rm,
        velocity_scale=kappa * distance_scale,
        **columns,
    )
    logger.info(
        f"Planned {kind} trajectory: p_t={p_t:.4f} m, theta={request.theta:.4f} rad, "
        f"t_total={marks.t_total:.4f} s, phi_rm={acc.phi_rm:.4f}/{dec.phi_rm:.4f} rad"
    )
    return trajectory


def assemble_trajectory(request: PlanRequest) -> Trajectory:
    """
    Full transport trajectory with tray rotation.

    Raises:
        InfeasibleDistanceError: If the target is shorter than any plannable move
    """
    obj, limits, dt = request.object, request.limits, request.sample_dt

    def phases_for(velocity_target: float) -> PhasePair:
        return (
            _rotation_accel_phase(request.theta, obj, limits, dt, velocity_target),
            _rotation_accel_phase(-request.theta, obj, limits, dt, velocity_target),
        )

    try:
        trajectory = _assemble(request, phases_for, "rotation")
        if trajectory.phi_rm_acc == 0.0 and trajectory.phi_rm_dec == 0.0:
            # Nothing tilts, so the move is the level-tray S-curve
            logger.info("No tray tilt fits the move; planning it level")
            return level_tray_trajectory(
                request, baseline_accel_cap(request.theta, obj, limits), kind="rotation"
            )
        return trajectory
    except TrayTransportError as e:
        logger.error(f"Error planning trajectory: {str(e)}")
        raise


def level_tray_trajectory(request: PlanRequest, cap: float, kind: str = "baseline") -> Trajectory:
    """
    Level-tray seven-segment S-curve with acceleration cap `cap`, sampled in
    closed form on the sample_dt grid.

    The grid runs to the first sample at or after the end of the profile, so
    the last sample sits exactly at the target and at rest.
    """
    limits, dt, p_t = request.limits, request.sample_dt, request.target_distance
    caps = limits.translation_caps.model_copy(update={"accel": min(cap, limits.a_max)})
    profile = plan_seven_segment(p_t, caps)

    n = max(1, int(math.ceil(profile.total_time / dt)))
    if n * dt < profile.total_time:
        n += 1
    t = np.arange(n + 1) * dt
    s, v, a, _ = sample_profile_array(profile, t)
    zeros = np.zeros_like(t)
    direction = request.direction
    x0, y0, z0 = request.start

    columns = dict(
        t=t, phi=zeros, omega=zeros.copy(), alpha=zeros.copy(), jerk_rot=zeros.copy(), a=a, v=v, s=s,
        x=x0 + s * direction[0], y=y0 + s * direction[1], z=z0 + s * direction[2], pitch=zeros.copy(),
    )
    for column in columns.values():
        column.setflags(write=False)

    marks = PhaseMarks(
        t_a=0.0,
        t_acc=profile.knots[3][0],
        t_cruise_end=profile.knots[4][0],
        t_b=0.0,
        t_total=n * dt,
    )
    logger.info(
        f"Planned level-tray trajectory: p_t={p_t:.4f} m, theta={request.theta:.4f} rad, "
        f"cap={cap:.4f} m/s², t_total={marks.t_total:.4f} s"
    )
    return Trajectory(
        request=request,
        kind=kind,
        marks=marks,
        velocity_scale=profile.peak_velocity / limits.v_max,
        **columns,
    )


def plan_baseline(request: PlanRequest) -> Trajectory:
    """Level-tray seven-segment S-curve with the static tipping cap."""
    cap = baseline_accel_cap(request.theta, request.object, request.limits)
    logger.debug(f"Baseline acceleration cap {cap:.6f} m/s²")
    try:
        return level_tray_trajectory(request, cap)
    except TrayTransportError as e:
        logger.error(f"Error planning baseline trajectory: {str(e)}")
        raise


def compare(request: PlanRequest, baseline_object: Optional[ObjectParams] = None) -> ComparisonReport:
    """
    Transport time with and without tray rotation.

    baseline_object lets the level-tray arm use a different object, as in the
    experiment where a 3 mm radius was stable without rotation and 4 mm with.
    """
    baseline_request = request
    if baseline_object is not None:
        baseline_request = request.model_copy(update={"object": baseline_object})

    rotated = assemble_trajectory(request)
    baseline = plan_baseline(baseline_request)
    improvement = 1.0 - rotated.t_total / baseline.t_total
    return ComparisonReport(
        t_with_rotation=rotated.t_total,
        t_without_rotation=baseline.t_total,
        improvement=improvement,
        target_distance=request.target_distance,
        theta=request.theta,
        psi=request.psi,
        phi_rm_acc=rotated.phi_rm_acc,
        phi_rm_dec=rotated.phi_rm_dec,
        rotated_radius=request.object.radius,
        baseline_radius=baseline_request.object.radius,
        baseline_accel_cap=baseline_accel_cap(
            request.theta, baseline_request.object, request.limits
        ),
    )


def grid_axis(start: float, stop: float, count: int) -> np.ndarray:
    if count < 1:
        raise ValueError(f"Grid size must be >= 1, got {count}")
    if count == 1:
        return np.array([start])
    return np.linspace(start, stop, count)


def _sweep_point(args: Tuple[int, float, float, ObjectParams, MotionLimits, float]) -> SweepRow:
    index, x, y, obj, limits, dt = args
    distance = math.hypot(x, y)
    if distance == 0:
        return SweepRow(index=index, x=x, y=y, note="origin skipped")
    request = PlanRequest(
        target_distance=distance,
        theta=math.atan2(y, abs(x)),
        psi=0.0 if x >= 0 else math.pi,
        object=obj,
        limits=limits,
        sample_dt=dt,
    )
    try:
        report = compare(request)
    except TrayTransportError as e:
        return SweepRow(index=index, x=x, y=y, note=f"{e.__class__.__name__}: {e}")
    return SweepRow(
        index=index,
        x=x,
        y=y,
        t_rot=report.t_with_rotation,
        t_norot=report.t_without_rotation,
        improvement=report.improvement,
    )


def efficiency_sweep(
    x_range: Tuple[float, float],
    y_range: Tuple[float, float],
    grid_n: Union[int, Sequence[int]],
    obj: ObjectParams,
    limits: MotionLimits,
    dt: float = 1e-3,
    workers: Optional[int] = None,
) -> SweepResult:
    """
    Compare both planners on a grid of targets in the vertical plane; x is
    the horizontal and y the vertical displacement. Rows are ordered with x
    as the outer index.
    """
    nx, ny = (grid_n, grid_n) if isinstance(grid_n, int) else tuple(grid_n)
    xs = grid_axis(x_range[0], x_range[1], nx)
    ys = grid_axis(y_range[0], y_range[1], ny)
    tasks = [
        (i * ny + j, float(x), float(y), obj, limits, dt)
        for i, x in enumerate(xs)
        for j, y in enumerate(ys)
    ]

    workers = workers if workers is not None else settings.SWEEP_WORKERS
    logger.info(f"Efficiency sweep over {len(tasks)} targets with {workers} worker(s)")
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows: List[SweepRow] = list(pool.map(_sweep_point, tasks, chunksize=8))
    else:
        rows = [_sweep_point(task) for task in tasks]
    return SweepResult(rows=rows)


def summarize(trajectory: Trajectory) -> TrajectorySummary:
    """Totals, phase times and the average-velocity distance estimate."""
    request = trajectory.request
    dt = request.sample_dt
    marks = trajectory.marks
    return TrajectorySummary(
        kind=trajectory.kind,
        target_distance=request.target_distance,
        theta=request.theta,
        psi=request.psi,
        sample_dt=dt,
        n_samples=trajectory.n_samples,
        t_total=trajectory.t_total,
        t_acc=trajectory.t_acc,
        t_cruise=trajectory.t_cruise,
        t_dec=trajectory.t_dec,
        t_a=marks.t_a,
        t_b=marks.t_b,
        phi_rm_acc=trajectory.phi_rm_acc,
        phi_rm_dec=trajectory.phi_rm_dec,
        peak_velocity=float(np.max(trajectory.v)),
        peak_acceleration=float(np.max(np.abs(trajectory.a))),
        final_displacement=float(trajectory.s[-1]),
        average_velocity_estimate=average_velocity_estimate(trajectory),
    )


def average_velocity_estimate(trajectory: Trajectory) -> float:
    """
    Distance estimate 2·v(t_a)·(t_a + t_b).

    Reported next to the planned distance as a sanity value only; the planner
    never uses it for feasibility.
    """
    marks = trajectory.marks
    index_a = min(int(round(marks.t_a / trajectory.request.sample_dt)), trajectory.n_samples - 1)
    return 2.0 * float(trajectory.v[index_a]) * (marks.t_a + marks.t_b)


def experiment_pairing() -> Tuple[PlanRequest, ObjectParams]:
    """
    The hardware comparison: 0.5 m at π/8 with the default limits, a 4 mm
    radius cylinder on the rotating tray and a 3 mm one on the level tray
    (the largest radii that stayed upright in each arm).
    """
    rotated = physics_service.make_cylinder(
        DEFAULT_OBJECT["mass_kg"], 0.004, DEFAULT_OBJECT["height_m"]
    )
    request = PlanRequest(
        target_distance=0.5,
        theta=math.pi / 8,
        object=rotated,
        limits=MotionLimits.default(),
    )
    return request, rotated.with_radius(0.003)


def parse_grid(spec: str) -> Tuple[Tuple[float, float, int], Tuple[float, float, int]]:
    """
    Parse a grid spec "x0:x1:n,y0:y1:n".

    Raises:
        InvalidParameterError: If the spec is malformed
    """
    axes = spec.split(",")
    if len(axes) != 2:
        raise InvalidParameterError(f"Grid spec must be x0:x1:n,y0:y1:n, got {spec!r}")
    parsed = []
    for axis in axes:
        parts = axis.strip().split(":")
        if len(parts) != 3:
            raise InvalidParameterError(f"Grid axis must be start:stop:count, got {axis!r}")
        try:
            start, stop, count = float(parts[0]), float(parts[1]), int(parts[2])
        except ValueError as e:
            raise InvalidParameterError(f"Grid axis {axis!r} is not numeric") from e
        if not (math.isfinite(start) and math.isfinite(stop)) or count < 1:
            raise InvalidParameterError(f"Grid axis {axis!r} needs finite bounds and a count >= 1")
        parsed.append((start, stop, count))
    return parsed[0], parsed[1]
