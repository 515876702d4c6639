"""
Planning requests and sampled trajectories.

A Trajectory stores its samples column-wise as read-only numpy arrays; the
KinematicSample view is built on demand.
"""

import math
from typing import Dict, Iterator, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, Field, field_validator

from traytransport.core.config import DEFAULT_SAMPLE_DT
from traytransport.models.limits import MotionLimits
from traytransport.models.physical import ObjectParams

# Column order of the trajectory CSV
TRAJECTORY_COLUMNS: Tuple[str, ...] = (
    "t", "phi", "omega", "alpha", "jerk_rot", "a", "v", "s", "x", "y", "z", "pitch",
)


class PlanRequest(BaseModel):
    """A straight-line transport task."""

    target_distance: float = Field(gt=0, description="Distance p_t along the line, m")
    theta: float = Field(0.0, description="Elevation of the line above horizontal, rad")
    psi: float = Field(0.0, description="Heading of the motion plane about world Z, rad")
    object: ObjectParams
    limits: MotionLimits
    sample_dt: float = Field(DEFAULT_SAMPLE_DT, gt=0, description="Sampling period, s")
    start: Tuple[float, float, float] = Field((0.0, 0.0, 0.0), description="Start position, m")

    model_config = {"frozen": True}

    @field_validator("theta")
    def validate_theta(cls, v):
        """Elevation must lie in [-π/2, π/2]."""
        if not math.isfinite(v) or abs(v) > math.pi / 2 + 1e-12:
            raise ValueError(f"Elevation theta must lie in [-pi/2, pi/2], got {v}")
        return v

    @field_validator("psi")
    def validate_psi(cls, v):
        if not math.isfinite(v):
            raise ValueError("Azimuth psi must be finite")
        return v

    @property
    def direction(self) -> Tuple[float, float, float]:
        """Unit vector of the transport line in world coordinates."""
        return (
            math.cos(self.theta) * math.cos(self.psi),
            math.cos(self.theta) * math.sin(self.psi),
            math.sin(self.theta),
        )


class KinematicSample(BaseModel):
    """State of tray and object at one sample time."""

    t: float
    phi: float = Field(description="Tilt magnitude from the active profile, rad")
    omega: float = Field(description="dφ/dt, rad/s")
    alpha: float = Field(description="d²φ/dt², rad/s²")
    jerk_rot: float = Field(description="d³φ/dt³, rad/s³")
    a: float = Field(description="Acceleration along the line, m/s²")
    v: float = Field(description="Velocity along the line, m/s")
    s: float = Field(description="Arc length along the line, m")
    pose: Tuple[float, float, float] = Field(description="x, y, z in meters")
    pitch: float = Field(description="Tray pitch relative to level, rad")

    model_config = {"frozen": True}


class PhaseMarks(BaseModel):
    """Times delimiting the acceleration, cruise and deceleration phases."""

    t_a: float = Field(description="End of the tray rotation in the acceleration phase")
    t_acc: float = Field(description="End of the acceleration phase")
    t_cruise_end: float = Field(description="Start of the deceleration phase")
    t_b: float = Field(description="Duration of the braking tray rotation")
    t_total: float

    model_config = {"frozen": True}


class Trajectory(BaseModel):
    """Uniformly sampled transport trajectory."""

    request: PlanRequest
    kind: str = Field(description="'rotation' or 'baseline'")
    t: np.ndarray
    phi: np.ndarray
    omega: np.ndarray
    alpha: np.ndarray
    jerk_rot: np.ndarray
    a: np.ndarray
    v: np.ndarray
    s: np.ndarray
    x: np.ndarray
    y: np.ndarray
    z: np.ndarray
    pitch: np.ndarray
    marks: PhaseMarks
    phi_rm_acc: float = Field(0.0, description="Fitted tilt of the acceleration phase")
    phi_rm_dec: float = Field(0.0, description="Fitted tilt of the braking phase")
    velocity_scale: float = Field(1.0, description="Fraction κ·λ of v_max actually reached")

    model_config = {"frozen": True, "arbitrary_types_allowed": True}

    @field_validator("kind")
    def validate_kind(cls, v):
        valid_kinds = ["rotation", "baseline", "loaded"]
        if v not in valid_kinds:
            raise ValueError(f"Trajectory kind must be one of {valid_kinds}")
        return v

    @property
    def n_samples(self) -> int:
        return int(self.t.shape[0])

    @property
    def t_total(self) -> float:
        return self.marks.t_total

    @property
    def t_acc(self) -> float:
        return self.marks.t_acc

    @property
    def t_cruise(self) -> float:
        return self.marks.t_cruise_end - self.marks.t_acc

    @property
    def t_dec(self) -> float:
        return self.marks.t_total - self.marks.t_cruise_end

    def column(self, name: str) -> np.ndarray:
        if name not in TRAJECTORY_COLUMNS:
            raise KeyError(f"Unknown trajectory column: {name}")
        return getattr(self, name)

    def columns(self) -> Dict[str, np.ndarray]:
        return {name: getattr(self, name) for name in TRAJECTORY_COLUMNS}

    def sample(self, index: int) -> KinematicSample:
        return KinematicSample(
            t=float(self.t[index]),
            phi=float(self.phi[index]),
            omega=float(self.omega[index]),
            alpha=float(self.alpha[index]),
            jerk_rot=float(self.jerk_rot[index]),
            a=float(self.a[index]),
            v=float(self.v[index]),
            s=float(self.s[index]),
            pose=(float(self.x[index]), float(self.y[index]), float(self.z[index])),
            pitch=float(self.pitch[index]),
        )

    def samples(self) -> Iterator[KinematicSample]:
        for index in range(self.n_samples):
            yield self.sample(index)

    def with_columns(self, **updates: np.ndarray) -> "Trajectory":
        """Copy with some columns replaced (used to inject faults in audits)."""
        for name in updates:
            if name not in TRAJECTORY_COLUMNS:
                raise KeyError(f"Unknown trajectory column: {name}")
        frozen = {name: _readonly(np.asarray(value, dtype=float)) for name, value in updates.items()}
        return self.model_copy(update=frozen)

    def truncated(self, n_samples: int) -> "Trajectory":
        """Copy keeping only the first n_samples samples."""
        cut = {name: _readonly(getattr(self, name)[:n_samples].copy()) for name in TRAJECTORY_COLUMNS}
        return self.model_copy(update=cut)


def _readonly(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


class TrajectorySummary(BaseModel):
    """Totals and phase times written next to a trajectory CSV."""

    kind: str
    target_distance: float
    theta: float
    psi: float
    sample_dt: float
    n_samples: int
    t_total: float
    t_acc: float
    t_cruise: float
    t_dec: float
    t_a: float
    t_b: float
    phi_rm_acc: float
    phi_rm_dec: float
    peak_velocity: float
    peak_acceleration: float
    final_displacement: float
    average_velocity_estimate: Optional[float] = Field(
        None, description="2·v(t_a)·(t_a+t_b), the average-velocity distance estimate"
    )


class ComparisonReport(BaseModel):
    """Transport time with and without tray rotation for one target."""

    t_with_rotation: float
    t_without_rotation: float
    improvement: float = Field(description="1 - t_with_rotation / t_without_rotation")
    target_distance: float
    theta: float
    psi: float
    phi_rm_acc: float
    phi_rm_dec: float
    rotated_radius: float
    baseline_radius: float
    baseline_accel_cap: float


class SweepRow(BaseModel):
    """One grid point of the efficiency map."""

    index: int
    x: float
    y: float
    t_rot: Optional[float] = None
    t_norot: Optional[float] = None
    improvement: Optional[float] = None
    note: Optional[str] = None


class SweepResult(BaseModel):
    rows: List[SweepRow] = Field(default_factory=list)

    @property
    def max_improvement(self) -> float:
        values = [row.improvement for row in self.rows if row.improvement is not None]
        return max(values) if values else 0.0
